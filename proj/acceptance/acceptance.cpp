// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <string>

#include "tnvqa/cli.hpp"
#include "tnvqa/tensor.hpp"
#include "tnvqa/vqa.hpp"

using namespace tnvqa;
using nlohmann::json;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

ParameterVector random_theta(const AnsatzCircuit& c, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> a(0.0, kTwoPi);
  ParameterVector t(static_cast<Eigen::Index>(c.total_params()));
  for (auto& x : t) x = a(rng);
  return t;
}

MatrixXc haar_unitary(Eigen::Index d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  MatrixXc m(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<MatrixXc> qr(m);
  MatrixXc q = qr.householderQ();
  for (Eigen::Index j = 0; j < d; ++j) {
    const Complex r = qr.matrixQR()(j, j);
    q.col(j) *= r / std::abs(r);
  }
  return q;
}

SatInstance random_3sat(int n, int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> var(1, n);
  std::bernoulli_distribution sign(0.5);
  SatInstance s;
  s.num_vars = n;
  for (int c = 0; c < m; ++c) {
    std::vector<int> clause;
    while (clause.size() < 3) {
      const int v = var(rng);
      bool dup = false;
      for (int l : clause) dup = dup || std::abs(l) == v;
      if (!dup) clause.push_back(sign(rng) ? v : -v);
    }
    s.clauses.push_back(clause);
  }
  return s;
}

// Clause count by direct enumeration, independent of unsatisfied_clauses().
int brute_force_count(const SatInstance& s, std::uint64_t x) {
  int violated = 0;
  for (const auto& clause : s.clauses) {
    bool ok = false;
    for (int lit : clause) ok = ok || (((x >> (s.num_vars - std::abs(lit))) & 1) == (lit > 0 ? 1u : 0u));
    violated += ok ? 0 : 1;
  }
  return violated;
}

double circular_distance(double a, double b) {
  const double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

bool monotone(const SweepResult& r) {
  for (std::size_t k = 1; k < r.per_k.size(); ++k) {
    // The warm-start seed reproduces the previous state only up to rounding.
    if (r.per_k[k].certificate < r.per_k[k - 1].certificate - 1e-12) return false;
  }
  return true;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

int monotone_checked = 0;
int monotone_violations = 0;

void record_monotone(const SweepResult& r) {
  ++monotone_checked;
  if (!monotone(r)) ++monotone_violations;
}

Outcome certificate_identity() {
  std::mt19937_64 rng(1001);
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const AnsatzCircuit c = build_mps_ansatz(4, trial % 3);
    const BlackBoxUnitary q = from_dense_matrix(haar_unitary(16, rng));
    const ParameterVector t = random_theta(c, rng);
    worst = std::max(worst, std::abs(certificate(c, t, q) - certificate_direct(c, t, q)));
  }
  return {worst <= 1e-12, fmt("max |difference| = %.2e over 100 pairs", worst)};
}

Outcome sat_recovery() {
  std::mt19937_64 rng(2002);
  int certified = 0, matched = 0;
  for (int inst = 0; inst < 20; ++inst) {
    const SatInstance sat = random_3sat(6, 10, rng);
    const double t = default_sat_time(sat);
    const BlackBoxUnitary q = from_sat_instance(sat, t);
    SweepConfig cfg;
    cfg.k_max = 0;
    cfg.optimizer.max_iters = 500;
    cfg.optimizer.restarts = 5;
    cfg.optimizer.seed = static_cast<std::uint64_t>(inst);
    const SweepResult r = run_sweep(6, q, cfg);
    const KResult& best = r.best();
    if (best.certificate >= 1 - 1e-6) ++certified;

    // Clause count read off the measured eigenphase vs. enumeration of the
    // dominant basis state.
    const Statevector psi = prepare_state(build_mps_ansatz(6, 0), best.theta);
    Eigen::Index top = 0;
    psi.amplitudes().cwiseAbs2().maxCoeff(&top);
    const Complex expectation = inner_product(psi, q.apply(psi));
    const double phase = std::fmod(-std::arg(expectation) + kTwoPi, kTwoPi);
    const int measured = static_cast<int>(std::lround(phase / t)) % static_cast<int>(sat.clauses.size() + 1);
    if (measured == brute_force_count(sat, static_cast<std::uint64_t>(top))) ++matched;

    SweepConfig extended = cfg;
    extended.k_max = 1;
    extended.cert_tol = 0;
    extended.optimizer.restarts = 1;
    extended.optimizer.max_iters = 200;
    record_monotone(run_sweep(6, q, extended));
  }
  return {certified == 20 && matched == 20,
          fmt("certified %.0f/20, clause count matched %.0f/20", certified, matched)};
}

Outcome planted_recovery() {
  int recovered = 0, separated = 0;
  double worst = 1;
  for (int inst = 0; inst < 10; ++inst) {
    const AnsatzCircuit c = build_mps_ansatz(4, 1);
    std::mt19937_64 rng(static_cast<std::uint64_t>(inst));
    const ParameterVector star = random_theta(c, rng);
    const Eigen::VectorXd phases = separated_phases(4, 0.5, static_cast<std::uint64_t>(inst + 100));
    double gap = 10;
    for (Eigen::Index x = 1; x < phases.size(); ++x) gap = std::min(gap, circular_distance(phases[0], phases[x]));
    if (gap >= 0.5 - 1e-12) ++separated;

    const BlackBoxUnitary q = planted_unitary(c, star, phases, static_cast<std::uint64_t>(inst + 7));
    SweepConfig cfg;
    cfg.k_max = 1;
    cfg.warm_start = true;
    cfg.optimizer.method = Method::fd_gradient_descent;
    cfg.optimizer.max_iters = 500;
    cfg.optimizer.restarts = 10;
    cfg.optimizer.seed = static_cast<std::uint64_t>(inst);
    const SweepResult r = run_sweep(4, q, cfg);
    record_monotone(r);
    const KResult& best = r.best();
    const VectorXc found = prepare_state(build_mps_ansatz(4, best.k), best.theta).amplitudes();
    const double overlap = std::norm(found.dot(std::get<PlantedData>(q.payload()).planted));
    worst = std::min(worst, overlap);
    if (overlap >= 0.99) ++recovered;
  }
  return {recovered == 10 && separated == 10,
          fmt("overlap >= 0.99 on %.0f/10 (worst %.6f), phase gap >= 0.5 on %.0f/10", recovered, worst, separated)};
}

Outcome monotone_sequence() {
  return {monotone_checked == 30 && monotone_violations == 0,
          fmt("%.0f violations over %.0f sweeps (instances of criteria 2 and 3)", monotone_violations,
              monotone_checked)};
}

Outcome rank_bound() {
  std::mt19937_64 rng(5005);
  int violations = 0, checked = 0;
  for (auto [n, k] : {std::pair{5, 1}, std::pair{6, 2}}) {
    const AnsatzCircuit c = build_mps_ansatz(n, k);
    for (int trial = 0; trial < 200; ++trial) {
      const Statevector s = prepare_state(c, random_theta(c, rng));
      for (int cut = 1; cut < n; ++cut) {
        ++checked;
        if (schmidt_spectrum(s, cut, 1e-10).rank_eps > (1 << k)) ++violations;
      }
    }
  }
  return {violations == 0, fmt("%.0f violations over %.0f cuts", violations, checked)};
}

Outcome ebit_depth_bound() {
  // Layers of random two-qubit blocks on neighbouring pairs, alternating
  // offsets, preceded by random single-qubit blocks.
  std::mt19937_64 rng(6006);
  const int n = 6;
  int violations = 0;
  double worst_margin = 1e9;
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + trial % 3;
    Statevector s = zero_state(n);
    for (int q = 0; q < n; ++q) apply_block_inplace(s, DenseUnitary(haar_unitary(2, rng)), QubitWindow({q}));
    const int first = static_cast<int>(rng() % 2);
    for (int layer = 0; layer < m; ++layer) {
      for (int q = (first + layer) % 2; q + 1 < n; q += 2) {
        apply_block_inplace(s, DenseUnitary(haar_unitary(4, rng)), QubitWindow::contiguous(q, 2));
      }
    }
    double max_entropy = 0;
    for (int cut = 1; cut < n; ++cut) max_entropy = std::max(max_entropy, entanglement_ebits(s, cut));
    const double bound = ebit_bound(n, m);
    worst_margin = std::min(worst_margin, bound - max_entropy);
    if (max_entropy > bound + 1e-10) ++violations;
  }
  return {violations == 0, fmt("%.0f violations over 100 circuits, smallest slack %.4f ebits", violations, worst_margin)};
}

Outcome truncation_scaling() {
  double r1_min = 1e300, r1_max = 0, r2_min = 1e300, r2_max = 0;
  for (double a : {0.3, 0.1, 0.03, 0.01}) {
    VectorXc v = VectorXc::Zero(4);
    v[0] = std::cos(a);
    v[3] = std::sin(a);
    const Truncation t = truncate(statevector_to_mps(Statevector(v)), 1);
    const double r1 = t.err1 / t.eps, r2 = t.err2 / (t.eps * t.eps);
    r1_min = std::min(r1_min, r1), r1_max = std::max(r1_max, r1);
    r2_min = std::min(r2_min, r2), r2_max = std::max(r2_max, r2);
  }
  const double spread1 = r1_max / r1_min, spread2 = r2_max / r2_min;
  return {spread1 < 3 && spread2 < 3,
          fmt("err1/eps in [%.6f, %.6f], err2/eps^2 spread factor %.6f", r1_min, r1_max, spread2)};
}

Outcome mps_round_trip() {
  std::mt19937_64 rng(8008);
  std::normal_distribution<double> g;
  double worst_fidelity = 1, worst_defect = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 7;
    VectorXc a(static_cast<Eigen::Index>(dimension_of(n)));
    for (auto& x : a) x = Complex(g(rng), g(rng));
    const Statevector s(a / a.norm());
    const MpsState m = statevector_to_mps(s);
    worst_fidelity = std::min(worst_fidelity, std::norm(inner_product(s, mps_to_statevector(m))));
    worst_defect = std::max(worst_defect, left_canonical_defect(m));
  }
  return {worst_fidelity >= 1 - 1e-10 && worst_defect <= 1e-10,
          fmt("worst fidelity 1 - %.2e, worst isometry defect %.2e", 1 - worst_fidelity, worst_defect)};
}

Outcome gradient_check() {
  std::mt19937_64 rng(9009);
  const AnsatzCircuit c = build_mps_ansatz(4, 1);
  const BlackBoxUnitary q = planted_unitary(c, random_theta(c, rng), separated_phases(4, 0.5, 9), 9);
  double worst = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const ParameterVector t = random_theta(c, rng);
    const Eigen::VectorXd a = loss_gradient_fd(c, t, q, 1e-4);
    const Eigen::VectorXd b = loss_gradient_fd(c, t, q, 1e-5);
    worst = std::max(worst, (a - b).cwiseAbs().maxCoeff());
  }
  return {worst <= 1e-4, fmt("max per-coordinate difference %.2e over 10 points", worst)};
}

Outcome resource_formulas() {
  const bool cnot = cnot_lower_bound(2) == 0.0 && cnot_lower_bound(4) == 2.25 && cnot_lower_bound(8) == 13.5;
  const bool ebit = ebit_bound(6, 2) == 2 && ebit_bound(5, 10) == 3 && ebit_bound(4, 0) == 0;
  return {cnot && ebit, std::string("cnot_lower_bound ") + (cnot ? "exact" : "WRONG") + ", ebit_bound " +
                            (ebit ? "exact" : "WRONG")};
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "tnvqa_acceptance";
  fs::create_directories(dir);
  auto strip = [](const std::string& path) {
    json r = read_json_file(path);
    r.erase("timestamp");
    for (auto& k : r["per_k"]) k.erase("wall_time_s");
    return dump_json(r);
  };
  bool all_equal = true;
  std::string detail;
  for (std::uint64_t shots : {std::uint64_t{0}, std::uint64_t{4096}}) {
    std::string texts[2];
    for (int run = 0; run < 2; ++run) {
      json cfg = {{"n", 4},
                  {"k_max", 1},
                  {"oracle", {{"type", "planted"}, {"planted", {{"k", 1}, {"seed", 11}, {"phases_seed", 12}}}}},
                  {"optimizer", {{"max_iters", 150}, {"restarts", 2}}},
                  {"shots", shots},
                  {"seed", 42},
                  {"output_path", (dir / "record.json").string()}};
      main_run(parse_run_config(cfg));
      texts[run] = strip((dir / "record.json").string());
    }
    const bool equal = texts[0] == texts[1];
    all_equal = all_equal && equal;
    detail += (detail.empty() ? "" : ", ") + std::string(shots ? "shots=4096 " : "exact ") +
              (equal ? "identical" : "DIFFERENT");
  }
  fs::remove_all(dir);
  return {all_equal, detail + " (timestamp and wall-clock fields excluded)"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "certificate identity", 10, certificate_identity},
      {2, "eigenvector recovery, diagonal family", 120, sat_recovery},
      {3, "eigenvector recovery, planted family", 300, planted_recovery},
      {4, "monotone sequence", 0, monotone_sequence},
      {5, "rank bound", 0, rank_bound},
      {6, "ebit depth bound", 0, ebit_depth_bound},
      {7, "truncation scaling", 0, truncation_scaling},
      {8, "MPS round trip", 0, mps_round_trip},
      {9, "gradient check", 0, gradient_check},
      {10, "resource formulas", 0, resource_formulas},
      {11, "determinism", 0, determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && seconds >= c.budget_s) {
      o.pass = false;
      o.detail += fmt("; over the %.0f s budget", c.budget_s);
    }
    if (!o.pass) ++failures;
    std::printf("%s [%d] %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
