#pragma once

// Black-box unitaries Q whose eigenvectors the variational sweep looks for.

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tnvqa/ansatz.hpp"
#include "tnvqa/simulator.hpp"

namespace tnvqa {

/// CNF formula. Literal +v means variable v is true, -v false; v in [1, num_vars].
struct SatInstance {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  void validate() const;
};

/// DIMACS CNF. Comment lines start with 'c'; a line starting with '%' ends the
/// clause section. Clauses may span lines and end with 0.
SatInstance parse_dimacs(std::istream& in);
SatInstance parse_dimacs(std::string_view text);
SatInstance load_dimacs(const std::string& path);

/// Number of clauses violated by basis state x. Qubit i (bit n-1-i of x)
/// holds variable i+1, with |1> meaning true.
int unsatisfied_clauses(const SatInstance& sat, std::uint64_t x);

/// Evolution time 2 pi / (m + 1) for m clauses, which keeps the phases of
/// the m+1 possible costs distinct on the unit circle.
double default_sat_time(const SatInstance& sat);

/// -J sum Z_i Z_{i+1} - h sum X_i on an open chain.
MatrixXc transverse_field_ising(int n, double coupling, double field);

/// Diagonal of the clause-violation Hamiltonian.
Eigen::VectorXd sat_cost_diagonal(const SatInstance& sat);

enum class OracleKind { dense, diagonal_phase, planted };

std::string to_string(OracleKind kind);

inline constexpr int kMaxPlantedQubits = 10;

/// Planted oracle Q = V diag(exp(i phases)) V^dagger. The first column of V
/// is the planted state; the others are a seeded Haar-random basis of its
/// complement, so they are generically far from any low-bond-dimension MPS.
struct PlantedData {
  int ebits = 0;
  ParameterVector theta_star;
  Eigen::VectorXd phases;
  VectorXc planted;
  std::uint64_t completion_seed = 0;
  MatrixXc completion;
};

class BlackBoxUnitary {
 public:
  struct Dense {
    MatrixXc matrix;
  };
  struct DiagonalPhase {
    VectorXc phases;
  };
  using Payload = std::variant<Dense, DiagonalPhase, PlantedData>;

  BlackBoxUnitary(int n, Payload payload, std::string description);

  int num_qubits() const { return n_; }
  OracleKind kind() const;
  const std::string& description() const { return description_; }
  const Payload& payload() const { return payload_; }

  void apply_inplace(Statevector& state) const;
  Statevector apply(Statevector state) const;

  /// Materialized 2^n x 2^n matrix, for brute-force checks.
  MatrixXc dense_matrix() const;

 private:
  int n_;
  Payload payload_;
  std::string description_;
};

BlackBoxUnitary from_dense_matrix(const MatrixXc& m, double tol = 1e-8);

/// exp(-i h t) by exact eigendecomposition of the Hermitian h.
BlackBoxUnitary from_hamiltonian_evolution(const MatrixXc& h, double t, double tol = 1e-8);

/// Diagonal oracle exp(-i t c(x)) with c(x) the number of violated clauses.
BlackBoxUnitary from_sat_instance(const SatInstance& sat, double t);

/// Oracle with prepare_state(circuit, theta_star) as an exact eigenvector of
/// eigenvalue exp(i phases[0]).
BlackBoxUnitary planted_unitary(const AnsatzCircuit& circuit, const ParameterVector& theta_star,
                                const Eigen::VectorXd& phases, std::uint64_t completion_seed = 0);

/// 2^n random eigenphases. phases[0] sits at circular distance >= gap from
/// all others; the rest sit on an even grid over the remaining arc in a
/// random order.
Eigen::VectorXd separated_phases(int n, double gap, std::uint64_t seed);

/// {"n": int, "re": [[...]], "im": [[...]]}, row-major.
MatrixXc parse_dense_matrix_json(std::string_view text);
MatrixXc load_dense_matrix_json(const std::string& path);

}  // namespace tnvqa
