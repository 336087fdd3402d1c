#include "tnvqa/vqa.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

namespace tnvqa {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c = 0) {
  return splitmix(splitmix(splitmix(splitmix(seed) ^ a) ^ b) ^ c);
}

void check_dimensions(const AnsatzCircuit& circuit, const ParameterVector& theta, const BlackBoxUnitary& q) {
  circuit.check_parameters(theta);
  if (circuit.num_qubits() != q.num_qubits()) {
    throw ShapeError("circuit has " + std::to_string(circuit.num_qubits()) + " qubits, oracle " +
                     std::to_string(q.num_qubits()));
  }
}

ParameterVector random_angles(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  ParameterVector theta(static_cast<Eigen::Index>(count));
  for (Eigen::Index j = 0; j < theta.size(); ++j) theta[j] = angle(rng);
  return theta;
}

}  // namespace

Statevector conjugated_state(const AnsatzCircuit& circuit, const ParameterVector& theta,
                             const BlackBoxUnitary& q) {
  check_dimensions(circuit, theta, q);
  const std::vector<DenseUnitary> blocks = block_unitaries(circuit, theta);
  Statevector state = zero_state(circuit.num_qubits());
  apply_circuit(state, circuit, blocks);
  q.apply_inplace(state);
  apply_circuit_inverse(state, circuit, blocks);
  return state;
}

Eigen::VectorXd probabilities(const AnsatzCircuit& circuit, const ParameterVector& theta,
                              const BlackBoxUnitary& q) {
  return projector_probs(conjugated_state(circuit, theta, q));
}

double log_likelihood(const Eigen::VectorXd& p, double clamp) {
  double loss = 0;
  for (Eigen::Index i = 0; i < p.size(); ++i) loss -= std::log(std::clamp(p[i], clamp, 1.0));
  return loss;
}

double certificate(const AnsatzCircuit& circuit, const ParameterVector& theta, const BlackBoxUnitary& q) {
  return std::min(1.0, std::norm(conjugated_state(circuit, theta, q)[0]));
}

double certificate_direct(const AnsatzCircuit& circuit, const ParameterVector& theta,
                          const BlackBoxUnitary& q) {
  check_dimensions(circuit, theta, q);
  const Statevector prepared = prepare_state(circuit, theta);
  return std::min(1.0, std::norm(inner_product(prepared, q.apply(prepared))));
}

ObjectiveReport evaluate(const AnsatzCircuit& circuit, const ParameterVector& theta, const BlackBoxUnitary& q,
                         double clamp) {
  const Statevector psi = conjugated_state(circuit, theta, q);
  ObjectiveReport r;
  r.p = projector_probs(psi);
  r.loss = log_likelihood(r.p, clamp);
  r.certificate = std::min(1.0, std::norm(psi[0]));
  return r;
}

Eigen::VectorXd loss_gradient_fd(const AnsatzCircuit& circuit, const ParameterVector& theta,
                                 const BlackBoxUnitary& q, double step) {
  check_dimensions(circuit, theta, q);
  const Objective loss = [&](const Eigen::VectorXd& x) { return log_likelihood(probabilities(circuit, x, q)); };
  return central_difference(loss, theta, step);
}

void SweepConfig::validate(int n) const {
  optimizer.validate();
  if (k_max < 0 || k_max > n / 2) {
    throw ArgumentError("k_max " + std::to_string(k_max) + " outside [0, floor(n/2)] for n = " + std::to_string(n));
  }
  if (!(cert_tol >= 0 && cert_tol < 1)) throw ArgumentError("cert_tol must lie in [0, 1)");
  if (!(clamp > 0 && clamp < 1)) throw ArgumentError("clamp must lie in (0, 1)");
}

const KResult& SweepResult::best() const {
  if (per_k.empty()) throw ArgumentError("sweep has no results");
  const KResult* best = &per_k.front();
  for (const KResult& r : per_k) {
    if (r.certificate > best->certificate) best = &r;
  }
  return *best;
}

Method default_method(std::size_t num_params) {
  return num_params <= 60 ? Method::nelder_mead : Method::spsa;
}

SweepResult run_sweep(int n, const BlackBoxUnitary& q, const SweepConfig& config) {
  config.validate(n);
  if (q.num_qubits() != n) throw ShapeError("oracle qubit count differs from n");
  using Clock = std::chrono::steady_clock;

  SweepResult sweep;
  sweep.n = n;
  const double target = 1.0 - config.cert_tol;
  std::optional<AnsatzCircuit> previous_circuit;
  ParameterVector previous_theta;

  for (int k = 0; k <= config.k_max; ++k) {
    const auto started = Clock::now();
    const AnsatzCircuit circuit = build_mps_ansatz(n, k);
    const auto uk = static_cast<std::uint64_t>(k);

    OptimizerConfig opt = config.optimizer;
    if (config.shots > 0) opt.method = Method::spsa;

    KResult best;
    best.k = k;
    best.certificate = -1;
    auto consider = [&](const ParameterVector& theta, std::vector<TracePoint> trace, int iterations, int restart) {
      const ObjectiveReport report = evaluate(circuit, theta, q, config.clamp);
      if (report.certificate > best.certificate) {
        best.theta = theta;
        best.loss = report.loss;
        best.certificate = report.certificate;
        best.trace = std::move(trace);
        best.iterations = iterations;
        best.selected_restart = restart;
      }
    };

    std::optional<ParameterVector> seed_theta;
    if (config.warm_start && previous_circuit) {
      seed_theta = embed_parameters(*previous_circuit, previous_theta, circuit);
      const ObjectiveReport report = evaluate(circuit, *seed_theta, q, config.clamp);
      consider(*seed_theta, {{0, report.loss}}, 0, -1);
    }

    long evaluations = 0;
    int restarts_run = 0;
    for (int restart = 0; restart < opt.restarts; ++restart) {
      if (best.certificate >= target) break;
      const auto ur = static_cast<std::uint64_t>(restart);
      const ParameterVector theta0 = (restart == 0 && seed_theta)
                                         ? *seed_theta
                                         : random_angles(circuit.total_params(), derive_seed(config.optimizer.seed, uk, ur));
      opt.seed = derive_seed(config.optimizer.seed, uk, ur, 1);

      std::uint64_t shot_counter = 0;
      const std::uint64_t shot_stream = derive_seed(config.optimizer.seed, uk, ur, 2);
      const Objective loss = [&](const Eigen::VectorXd& x) {
        const Statevector psi = conjugated_state(circuit, x, q);
        if (config.shots == 0) return log_likelihood(projector_probs(psi), config.clamp);
        const Eigen::VectorXd p = sample_probs(psi, config.shots, splitmix(shot_stream + shot_counter++));
        return log_likelihood(p, config.clamp);
      };

      MinimizeResult run = minimize(loss, theta0, opt);
      evaluations += run.evaluations;
      ++restarts_run;
      consider(run.theta, std::move(run.trace), run.iterations, restart);
    }

    best.evaluations = evaluations;
    best.restarts_run = restarts_run;
    best.wall_time_s = std::chrono::duration<double>(Clock::now() - started).count();
    previous_circuit = circuit;
    previous_theta = best.theta;
    const bool certified = best.certificate >= target;
    sweep.per_k.push_back(std::move(best));
    if (certified) {
      sweep.terminated_early = k < config.k_max;
      std::ostringstream why;
      why << "certificate reached 1 - " << config.cert_tol << " at k = " << k;
      sweep.reason = why.str();
      break;
    }
  }
  if (sweep.reason.empty()) sweep.reason = "completed k = 0 ... " + std::to_string(config.k_max);
  return sweep;
}

}  // namespace tnvqa
