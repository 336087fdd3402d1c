#include "tnvqa/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "tnvqa/errors.hpp"

namespace tnvqa {

namespace {

// Counts evaluations and rejects non-finite values.
class CountingObjective {
 public:
  explicit CountingObjective(const Objective& f) : f_(f) {}

  double operator()(const Eigen::VectorXd& x) {
    ++count_;
    const double v = f_(x);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "objective returned " << v << " at theta = [";
      for (Eigen::Index j = 0; j < x.size(); ++j) msg << (j ? ", " : "") << x[j];
      msg << "]";
      throw NumericalError(msg.str());
    }
    return v;
  }

  long count() const { return count_; }

 private:
  const Objective& f_;
  long count_ = 0;
};

struct Vertex {
  Eigen::VectorXd x;
  double f = 0;
};

// Nelder-Mead with dimension-adaptive coefficients (Gao and Han), which keep
// the simplex from degenerating in tens of dimensions.
MinimizeResult nelder_mead(CountingObjective& f, const Eigen::VectorXd& x0, const OptimizerConfig& cfg) {
  const Eigen::Index d = x0.size();
  const double dd = static_cast<double>(d);
  const double reflect = 1.0;
  const double expand = d > 1 ? 1.0 + 2.0 / dd : 2.0;
  const double contract = d > 1 ? 0.75 - 1.0 / (2.0 * dd) : 0.5;
  const double shrink = d > 1 ? 1.0 - 1.0 / dd : 0.5;
  constexpr double kInitialStep = 0.5;

  std::vector<Vertex> simplex;
  simplex.reserve(static_cast<std::size_t>(d + 1));
  simplex.push_back({x0, f(x0)});
  for (Eigen::Index j = 0; j < d; ++j) {
    Eigen::VectorXd x = x0;
    x[j] += kInitialStep;
    simplex.push_back({x, f(x)});
  }
  auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
  std::stable_sort(simplex.begin(), simplex.end(), by_value);

  MinimizeResult result;
  result.trace.push_back({0, simplex.front().f});
  int iter = 0;
  while (iter < cfg.max_iters) {
    if (simplex.front().f < cfg.tol_loss) break;
    if (simplex.back().f - simplex.front().f <= cfg.tol_loss) break;
    ++iter;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(d);
    for (Eigen::Index j = 0; j < d; ++j) centroid += simplex[static_cast<std::size_t>(j)].x;
    centroid /= dd;
    Vertex& worst = simplex.back();
    const double second_worst = simplex[static_cast<std::size_t>(d - 1)].f;

    Vertex r{centroid + reflect * (centroid - worst.x), 0};
    r.f = f(r.x);
    bool do_shrink = false;
    if (r.f < simplex.front().f) {
      Vertex e{centroid + expand * (r.x - centroid), 0};
      e.f = f(e.x);
      worst = e.f < r.f ? std::move(e) : std::move(r);
    } else if (r.f < second_worst) {
      worst = std::move(r);
    } else if (r.f < worst.f) {
      Vertex c{centroid + contract * (r.x - centroid), 0};
      c.f = f(c.x);
      if (c.f <= r.f) {
        worst = std::move(c);
      } else {
        do_shrink = true;
      }
    } else {
      Vertex c{centroid - contract * (centroid - worst.x), 0};
      c.f = f(c.x);
      if (c.f < worst.f) {
        worst = std::move(c);
      } else {
        do_shrink = true;
      }
    }
    if (do_shrink) {
      const Eigen::VectorXd best = simplex.front().x;
      for (std::size_t j = 1; j < simplex.size(); ++j) {
        simplex[j].x = best + shrink * (simplex[j].x - best);
        simplex[j].f = f(simplex[j].x);
      }
    }
    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    result.trace.push_back({iter, simplex.front().f});
  }
  result.theta = simplex.front().x;
  result.loss = simplex.front().f;
  result.iterations = iter;
  return result;
}

// Simultaneous-perturbation stochastic approximation with the standard gain
// exponents; the step gain is calibrated from a few gradient samples at x0.
MinimizeResult spsa(CountingObjective& f, const Eigen::VectorXd& x0, const OptimizerConfig& cfg) {
  const Eigen::Index d = x0.size();
  constexpr double kAlpha = 0.602;
  constexpr double kGamma = 0.101;
  constexpr double kPerturbation = 0.15;
  constexpr double kTargetFirstStep = 0.2;
  constexpr int kCalibrationSamples = 4;
  const double stability = 0.1 * cfg.max_iters;

  std::mt19937_64 rng(cfg.seed);
  std::bernoulli_distribution coin(0.5);
  auto draw_delta = [&] {
    Eigen::VectorXd delta(d);
    for (Eigen::Index j = 0; j < d; ++j) delta[j] = coin(rng) ? 1.0 : -1.0;
    return delta;
  };
  auto estimate = [&](const Eigen::VectorXd& x, double ck) {
    const Eigen::VectorXd delta = draw_delta();
    const double diff = f(x + ck * delta) - f(x - ck * delta);
    return Eigen::VectorXd((diff / (2.0 * ck)) * delta.cwiseInverse());
  };

  double mean_grad = 0;
  for (int s = 0; s < kCalibrationSamples; ++s) mean_grad += estimate(x0, kPerturbation).cwiseAbs().mean();
  mean_grad /= kCalibrationSamples;
  const double a = mean_grad > 0 ? kTargetFirstStep * std::pow(stability + 1.0, kAlpha) / mean_grad : kTargetFirstStep;

  MinimizeResult result;
  Eigen::VectorXd x = x0;
  result.theta = x0;
  result.loss = f(x0);
  result.trace.push_back({0, result.loss});
  int iter = 0;
  while (iter < cfg.max_iters) {
    if (result.loss < cfg.tol_loss) break;
    ++iter;
    const double ak = a / std::pow(iter + stability, kAlpha);
    const double ck = kPerturbation / std::pow(iter, kGamma);
    x -= ak * estimate(x, ck);
    const double fx = f(x);
    if (fx < result.loss) {
      result.loss = fx;
      result.theta = x;
    }
    result.trace.push_back({iter, result.loss});
  }
  result.iterations = iter;
  return result;
}

// Descent on central-difference gradients. Directions come from a BFGS
// inverse-Hessian estimate (reset to steepest descent whenever it stops
// giving descent), steps from Armijo backtracking.
MinimizeResult fd_gradient_descent(CountingObjective& f, const Eigen::VectorXd& x0, const OptimizerConfig& cfg) {
  constexpr double kArmijo = 1e-4;
  constexpr int kMaxBacktracks = 40;
  const Objective counted = [&f](const Eigen::VectorXd& x) { return f(x); };
  const Eigen::Index d = x0.size();
  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(d, d);

  MinimizeResult result;
  Eigen::VectorXd x = x0;
  double fx = f(x);
  result.trace.push_back({0, fx});
  Eigen::VectorXd g = central_difference(counted, x, cfg.fd_step);
  Eigen::MatrixXd inv_hessian = identity;
  int iter = 0;
  while (iter < cfg.max_iters) {
    if (fx < cfg.tol_loss || g.squaredNorm() == 0.0) break;
    ++iter;
    Eigen::VectorXd dir = -inv_hessian * g;
    double slope = g.dot(dir);
    if (!(slope < 0)) {
      inv_hessian = identity;
      dir = -g;
      slope = -g.squaredNorm();
    }
    double step = 1.0;
    bool accepted = false;
    Eigen::VectorXd candidate;
    double fc = fx;
    for (int b = 0; b < kMaxBacktracks; ++b) {
      candidate = x + step * dir;
      fc = f(candidate);
      if (fc <= fx + kArmijo * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      result.trace.push_back({iter, fx});
      break;
    }
    const Eigen::VectorXd g_new = central_difference(counted, candidate, cfg.fd_step);
    const Eigen::VectorXd s = candidate - x;
    const Eigen::VectorXd y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-14) {
      const double rho = 1.0 / sy;
      inv_hessian = (identity - rho * s * y.transpose()) * inv_hessian * (identity - rho * y * s.transpose()) +
                    rho * s * s.transpose();
    }
    const double improvement = fx - fc;
    x = candidate;
    fx = fc;
    g = g_new;
    result.trace.push_back({iter, fx});
    if (improvement <= cfg.tol_loss) break;
  }
  result.theta = x;
  result.loss = fx;
  result.iterations = iter;
  return result;
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::nelder_mead:
      return "nelder-mead";
    case Method::spsa:
      return "spsa";
    case Method::fd_gradient_descent:
      return "fd-gradient-descent";
  }
  return "unknown";
}

Method method_from_string(const std::string& name) {
  if (name == "nelder-mead") return Method::nelder_mead;
  if (name == "spsa") return Method::spsa;
  if (name == "fd-gradient-descent") return Method::fd_gradient_descent;
  throw ArgumentError("unknown optimizer method '" + name + "'");
}

void OptimizerConfig::validate() const {
  if (max_iters < 1) throw ArgumentError("max_iters must be >= 1");
  if (!(fd_step > 0)) throw ArgumentError("fd_step must be > 0");
  if (restarts < 1) throw ArgumentError("restarts must be >= 1");
  if (!(tol_loss >= 0)) throw ArgumentError("tol_loss must be >= 0");
}

Eigen::VectorXd central_difference(const Objective& objective, const Eigen::VectorXd& x, double h) {
  if (!(h > 0)) throw ArgumentError("finite-difference step must be > 0");
  Eigen::VectorXd g(x.size());
  Eigen::VectorXd probe = x;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    probe[j] = x[j] + h;
    const double up = objective(probe);
    probe[j] = x[j] - h;
    const double down = objective(probe);
    probe[j] = x[j];
    g[j] = (up - down) / (2.0 * h);
  }
  return g;
}

MinimizeResult minimize(const Objective& objective, const Eigen::VectorXd& theta0,
                        const OptimizerConfig& config) {
  config.validate();
  if (theta0.size() == 0) throw ArgumentError("cannot minimize over zero parameters");
  CountingObjective f(objective);
  MinimizeResult result;
  switch (config.method) {
    case Method::nelder_mead:
      result = nelder_mead(f, theta0, config);
      break;
    case Method::spsa:
      result = spsa(f, theta0, config);
      break;
    case Method::fd_gradient_descent:
      result = fd_gradient_descent(f, theta0, config);
      break;
  }
  result.evaluations = f.count();
  return result;
}

}  // namespace tnvqa
