#include "tnvqa/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "json.hpp"

namespace tnvqa {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

int qubits_of_square(const MatrixXc& m, const char* what) {
  const int n = qubits_for_dimension(m.rows());
  if (m.rows() != m.cols() || n < 1) {
    throw ShapeError(std::string(what) + " must be 2^n x 2^n, got " + std::to_string(m.rows()) + " x " +
                     std::to_string(m.cols()));
  }
  check_qubit_count(n);
  return n;
}

}  // namespace

int unsatisfied_clauses(const SatInstance& sat, std::uint64_t x) {
  const int n = sat.num_vars;
  int count = 0;
  for (const auto& clause : sat.clauses) {
    bool satisfied = false;
    for (int lit : clause) {
      const bool value = (x >> (n - std::abs(lit))) & 1;
      if (value == (lit > 0)) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) ++count;
  }
  return count;
}

double default_sat_time(const SatInstance& sat) {
  return kTwoPi / static_cast<double>(sat.clauses.size() + 1);
}

MatrixXc transverse_field_ising(int n, double coupling, double field) {
  check_qubit_count(n);
  const Eigen::Index d = static_cast<Eigen::Index>(dimension_of(n));
  MatrixXc h = MatrixXc::Zero(d, d);
  for (Eigen::Index x = 0; x < d; ++x) {
    const auto xu = static_cast<std::uint64_t>(x);
    double diag = 0;
    for (int i = 0; i + 1 < n; ++i) {
      const bool a = xu & qubit_mask(n, i);
      const bool b = xu & qubit_mask(n, i + 1);
      diag -= coupling * (a == b ? 1.0 : -1.0);
    }
    h(x, x) = diag;
    for (int i = 0; i < n; ++i) h(static_cast<Eigen::Index>(xu ^ qubit_mask(n, i)), x) -= field;
  }
  return h;
}

Eigen::VectorXd sat_cost_diagonal(const SatInstance& sat) {
  sat.validate();
  check_qubit_count(sat.num_vars);
  const Eigen::Index d = static_cast<Eigen::Index>(dimension_of(sat.num_vars));
  Eigen::VectorXd c(d);
  for (Eigen::Index x = 0; x < d; ++x) c[x] = unsatisfied_clauses(sat, static_cast<std::uint64_t>(x));
  return c;
}

std::string to_string(OracleKind kind) {
  switch (kind) {
    case OracleKind::dense:
      return "dense";
    case OracleKind::diagonal_phase:
      return "diagonal-phase";
    case OracleKind::planted:
      return "planted";
  }
  return "unknown";
}

BlackBoxUnitary::BlackBoxUnitary(int n, Payload payload, std::string description)
    : n_(n), payload_(std::move(payload)), description_(std::move(description)) {
  check_qubit_count(n_);
  const Eigen::Index d = static_cast<Eigen::Index>(dimension_of(n_));
  std::visit(Overloaded{
                 [&](const Dense& p) {
                   if (p.matrix.rows() != d || p.matrix.cols() != d) throw ShapeError("dense oracle size mismatch");
                 },
                 [&](const DiagonalPhase& p) {
                   if (p.phases.size() != d) throw ShapeError("phase vector size mismatch");
                   const double worst = (p.phases.cwiseAbs().array() - 1.0).abs().maxCoeff();
                   if (worst > 1e-12) throw ValidationError("diagonal phases must have unit modulus");
                 },
                 [&](const PlantedData& p) {
                   if (p.phases.size() != d || p.planted.size() != d || p.completion.rows() != d ||
                       p.completion.cols() != d) {
                     throw ShapeError("planted oracle size mismatch");
                   }
                 },
             },
             payload_);
}

OracleKind BlackBoxUnitary::kind() const {
  return std::visit(Overloaded{
                        [](const Dense&) { return OracleKind::dense; },
                        [](const DiagonalPhase&) { return OracleKind::diagonal_phase; },
                        [](const PlantedData&) { return OracleKind::planted; },
                    },
                    payload_);
}

void BlackBoxUnitary::apply_inplace(Statevector& state) const {
  if (state.num_qubits() != n_) {
    throw ShapeError("oracle on " + std::to_string(n_) + " qubits applied to " +
                     std::to_string(state.num_qubits()) + "-qubit state");
  }
  VectorXc& a = state.amplitudes();
  std::visit(Overloaded{
                 [&](const Dense& p) { a = p.matrix * a; },
                 [&](const DiagonalPhase& p) { a.array() *= p.phases.array(); },
                 [&](const PlantedData& p) {
                   VectorXc coeffs = p.completion.adjoint() * a;
                   for (Eigen::Index x = 0; x < coeffs.size(); ++x) coeffs[x] *= std::polar(1.0, p.phases[x]);
                   a.noalias() = p.completion * coeffs;
                 },
             },
             payload_);
}

Statevector BlackBoxUnitary::apply(Statevector state) const {
  apply_inplace(state);
  return state;
}

MatrixXc BlackBoxUnitary::dense_matrix() const {
  const Eigen::Index d = static_cast<Eigen::Index>(dimension_of(n_));
  MatrixXc m(d, d);
  for (Eigen::Index c = 0; c < d; ++c) m.col(c) = apply(basis_state(n_, static_cast<std::uint64_t>(c))).amplitudes();
  return m;
}

BlackBoxUnitary from_dense_matrix(const MatrixXc& m, double tol) {
  const int n = qubits_of_square(m, "oracle matrix");
  const double defect = (m.adjoint() * m - MatrixXc::Identity(m.rows(), m.cols())).norm();
  if (!(defect <= tol)) {
    throw ValidationError("oracle matrix is not unitary: ||M^H M - I||_F = " + std::to_string(defect));
  }
  return BlackBoxUnitary(n, BlackBoxUnitary::Dense{m}, "dense matrix");
}

BlackBoxUnitary from_hamiltonian_evolution(const MatrixXc& h, double t, double tol) {
  const int n = qubits_of_square(h, "Hamiltonian");
  const double defect = (h - h.adjoint()).norm();
  if (!(defect <= tol)) {
    throw ValidationError("Hamiltonian is not Hermitian: ||H - H^H||_F = " + std::to_string(defect));
  }
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(h);
  const VectorXc phases = es.eigenvalues().unaryExpr([t](double lambda) { return std::polar(1.0, -lambda * t); });
  MatrixXc u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  return BlackBoxUnitary(n, BlackBoxUnitary::Dense{std::move(u)}, "exp(-i H t), t = " + std::to_string(t));
}

BlackBoxUnitary from_sat_instance(const SatInstance& sat, double t) {
  const Eigen::VectorXd cost = sat_cost_diagonal(sat);
  VectorXc phases = cost.unaryExpr([t](double c) { return std::polar(1.0, -t * c); });
  return BlackBoxUnitary(sat.num_vars, BlackBoxUnitary::DiagonalPhase{std::move(phases)},
                         "SAT cost evolution, " + std::to_string(sat.clauses.size()) + " clauses, t = " +
                             std::to_string(t));
}

BlackBoxUnitary planted_unitary(const AnsatzCircuit& circuit, const ParameterVector& theta_star,
                                const Eigen::VectorXd& phases, std::uint64_t completion_seed) {
  const int n = circuit.num_qubits();
  if (n > kMaxPlantedQubits) {
    throw CapacityError("planted oracles are stored densely; n = " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxPlantedQubits));
  }
  const Eigen::Index d = static_cast<Eigen::Index>(dimension_of(n));
  if (phases.size() != d) {
    throw ShapeError("planted oracle needs " + std::to_string(d) + " phases, got " + std::to_string(phases.size()));
  }
  PlantedData data;
  data.ebits = circuit.ebits();
  data.theta_star = theta_star;
  data.phases = phases;
  data.planted = prepare_state(circuit, theta_star).amplitudes();
  data.completion_seed = completion_seed;

  // QR of [planted | gaussian columns]: Q's first column is the planted state up
  // to a phase, the rest is a Haar-distributed basis of its complement.
  std::mt19937_64 rng(completion_seed);
  std::normal_distribution<double> gauss;
  MatrixXc g(d, d);
  g.col(0) = data.planted;
  for (Eigen::Index c = 1; c < d; ++c) {
    for (Eigen::Index r = 0; r < d; ++r) g(r, c) = Complex(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<MatrixXc> qr(g);
  MatrixXc v = qr.householderQ();
  for (Eigen::Index c = 0; c < d; ++c) {
    const Complex r = qr.matrixQR()(c, c);
    if (std::abs(r) > 0) v.col(c) *= r / std::abs(r);
  }
  data.completion = std::move(v);

  return BlackBoxUnitary(n, std::move(data), "planted " + std::to_string(circuit.ebits()) + "-ebit eigenvector");
}

Eigen::VectorXd separated_phases(int n, double gap, std::uint64_t seed) {
  check_qubit_count(n);
  const Eigen::Index d = static_cast<Eigen::Index>(dimension_of(n));
  if (gap < 0 || 2.0 * gap >= kTwoPi) throw ArgumentError("phase gap must lie in [0, pi)");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  Eigen::VectorXd phases(d);
  const double base = kTwoPi * unit(rng);
  phases[0] = base;
  if (d == 1) return phases;
  const double arc = kTwoPi - 2.0 * gap;
  const double spacing = d > 2 ? arc / static_cast<double>(d - 2) : 0.0;
  std::vector<Eigen::Index> slots(static_cast<std::size_t>(d - 1));
  for (Eigen::Index j = 0; j < d - 1; ++j) slots[static_cast<std::size_t>(j)] = j;
  std::shuffle(slots.begin(), slots.end(), rng);
  for (Eigen::Index x = 1; x < d; ++x) {
    const double offset = gap + spacing * static_cast<double>(slots[static_cast<std::size_t>(x - 1)]);
    phases[x] = std::fmod(base + offset, kTwoPi);
  }
  return phases;
}

MatrixXc parse_dense_matrix_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("dense matrix JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("re") || !j.contains("im")) {
    throw ParseError("dense matrix JSON needs keys n, re, im");
  }
  if (!j["n"].is_number_integer()) throw ParseError("dense matrix JSON: n must be an integer");
  const int n = j["n"].get<int>();
  check_qubit_count(n);
  const auto d = static_cast<std::size_t>(dimension_of(n));
  MatrixXc m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (const char* part : {"re", "im"}) {
    const auto& rows = j[part];
    if (!rows.is_array() || rows.size() != d) {
      throw ParseError(std::string("dense matrix JSON: '") + part + "' must have " + std::to_string(d) + " rows");
    }
    for (std::size_t r = 0; r < d; ++r) {
      if (!rows[r].is_array() || rows[r].size() != d) {
        throw ParseError(std::string("dense matrix JSON: ") + part + "[" + std::to_string(r) + "] must have " +
                         std::to_string(d) + " entries");
      }
      for (std::size_t c = 0; c < d; ++c) {
        const auto& v = rows[r][c];
        if (!v.is_number()) {
          throw ParseError(std::string("dense matrix JSON: ") + part + "[" + std::to_string(r) + "][" +
                           std::to_string(c) + "] is not a number");
        }
        auto& entry = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        if (part[0] == 'r') {
          entry.real(v.get<double>());
        } else {
          entry.imag(v.get<double>());
        }
      }
    }
  }
  return m;
}

MatrixXc load_dense_matrix_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open matrix file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dense_matrix_json(buf.str());
}

}  // namespace tnvqa
