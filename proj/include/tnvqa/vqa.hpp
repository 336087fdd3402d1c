#pragma once

// Variational eigenvector search against a black-box unitary Q.
//
// For a circuit U(theta) the loop measures |psi(theta)> = U^dagger Q U |0...0>
// qubit by qubit. p_i is the probability of qubit i reading |0>, the loss is
// -sum_i ln p_i, and |<0...0|psi(theta)>|^2 certifies how close U(theta)|0...0>
// is to an eigenvector of Q (exactly 1 iff it is one).

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "tnvqa/ansatz.hpp"
#include "tnvqa/optimize.hpp"
#include "tnvqa/oracle.hpp"

namespace tnvqa {

inline constexpr double kDefaultClamp = 1e-12;

struct ObjectiveReport {
  Eigen::VectorXd p;
  double loss = 0;
  double certificate = 0;
};

/// U^dagger(theta) Q U(theta) |0...0>.
Statevector conjugated_state(const AnsatzCircuit& circuit, const ParameterVector& theta,
                             const BlackBoxUnitary& q);

Eigen::VectorXd probabilities(const AnsatzCircuit& circuit, const ParameterVector& theta,
                              const BlackBoxUnitary& q);

/// -sum_i ln(p_i), with each p_i clamped to [clamp, 1].
double log_likelihood(const Eigen::VectorXd& p, double clamp = kDefaultClamp);

/// |<0...0| U^dagger Q U |0...0>|^2.
double certificate(const AnsatzCircuit& circuit, const ParameterVector& theta, const BlackBoxUnitary& q);

/// |<psi~|Q|psi~>|^2 with |psi~> = U|0...0>; equal to certificate() by construction.
double certificate_direct(const AnsatzCircuit& circuit, const ParameterVector& theta,
                          const BlackBoxUnitary& q);

/// Probabilities, loss and certificate from one simulation.
ObjectiveReport evaluate(const AnsatzCircuit& circuit, const ParameterVector& theta,
                         const BlackBoxUnitary& q, double clamp = kDefaultClamp);

Eigen::VectorXd loss_gradient_fd(const AnsatzCircuit& circuit, const ParameterVector& theta,
                                 const BlackBoxUnitary& q, double step);

struct SweepConfig {
  int k_max = 0;
  OptimizerConfig optimizer;
  bool warm_start = true;
  double cert_tol = 1e-6;
  /// 0 evaluates probabilities exactly; otherwise each loss uses this many shots.
  std::uint64_t shots = 0;
  double clamp = kDefaultClamp;

  void validate(int n) const;
};

struct KResult {
  int k = 0;
  ParameterVector theta;
  double loss = 0;
  double certificate = 0;
  std::vector<TracePoint> trace;  // of the selected restart
  int iterations = 0;
  long evaluations = 0;  // over all restarts
  int restarts_run = 0;
  /// Index of the selected restart; -1 when the warm-start seed itself won.
  int selected_restart = 0;
  double wall_time_s = 0;
};

struct SweepResult {
  int n = 0;
  std::vector<KResult> per_k;
  bool terminated_early = false;
  std::string reason;

  /// Entry with the highest certificate; ties go to the smallest k.
  const KResult& best() const;
};

/// Optimizer used when the caller has no preference: Nelder-Mead up to 60
/// parameters, SPSA beyond.
Method default_method(std::size_t num_params);

/// Successive k = 0 ... k_max approximations of an eigenvector of q. Each k
/// runs `restarts` optimizations (the first warm-started from the previous k
/// when enabled) and keeps the candidate with the highest certificate. The
/// sweep stops once a certificate reaches 1 - cert_tol.
SweepResult run_sweep(int n, const BlackBoxUnitary& q, const SweepConfig& config);

}  // namespace tnvqa
