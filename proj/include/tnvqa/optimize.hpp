#pragma once

// Classical minimizers driving the variational loop. All are deterministic
// given OptimizerConfig::seed.

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace tnvqa {

enum class Method { nelder_mead, spsa, fd_gradient_descent };

std::string to_string(Method m);
Method method_from_string(const std::string& name);

struct OptimizerConfig {
  Method method = Method::nelder_mead;
  int max_iters = 500;
  /// Stop once the loss improvement (or simplex spread) falls below this.
  double tol_loss = 1e-12;
  double fd_step = 1e-5;
  int restarts = 1;
  std::uint64_t seed = 0;

  void validate() const;
};

struct TracePoint {
  int iter = 0;
  double loss = 0;  // best loss seen up to this iteration
};

struct MinimizeResult {
  Eigen::VectorXd theta;
  double loss = 0;
  std::vector<TracePoint> trace;
  int iterations = 0;
  long evaluations = 0;
};

using Objective = std::function<double(const Eigen::VectorXd&)>;

/// Minimizes `objective` from theta0 and returns the best point seen. The
/// objective may be non-negative-bounded; a loss below tol_loss counts as
/// converged. Throws NumericalError if the objective returns a non-finite value.
MinimizeResult minimize(const Objective& objective, const Eigen::VectorXd& theta0,
                        const OptimizerConfig& config);

/// (f(x + h e_j) - f(x - h e_j)) / 2h for every coordinate.
Eigen::VectorXd central_difference(const Objective& objective, const Eigen::VectorXd& x, double h);

}  // namespace tnvqa
