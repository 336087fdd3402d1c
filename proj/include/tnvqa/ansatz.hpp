#pragma once

// Staircase circuits that prepare open-boundary matrix product states.
//
// A k-ebit circuit on n qubits (k >= 1) is n-k blocks of width k+1, block j
// acting on qubits [j, j+k], applied in order j = 0 ... n-k-1. Every block is
// exp(-i H) with H a real combination of the 4^{k+1}-1 non-identity Pauli
// strings, so outputs have Schmidt rank <= 2^k across every contiguous cut.
//
// k = 0 is the product family: qubit i is prepared as
//   cos(a_i)|0> + exp(-i b_i) sin(a_i)|1>
// with parameters laid out (a_0, b_0, a_1, b_1, ...).

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "tnvqa/simulator.hpp"

namespace tnvqa {

using ParameterVector = Eigen::VectorXd;

/// Largest block width supported by the Pauli-exponential parameterization.
inline constexpr int kMaxBlockWidth = 6;

struct BlockSpec {
  QubitWindow window;
  std::size_t param_offset = 0;
  std::size_t param_len = 0;
};

class AnsatzCircuit {
 public:
  AnsatzCircuit(int n, int k, std::vector<BlockSpec> blocks, std::size_t total_params)
      : n_(n), k_(k), blocks_(std::move(blocks)), total_params_(total_params) {}

  int num_qubits() const { return n_; }
  int ebits() const { return k_; }
  /// Bond dimension bound 2^k carried across every cut.
  int bond_dim() const { return 1 << k_; }
  bool is_product() const { return k_ == 0; }
  const std::vector<BlockSpec>& blocks() const { return blocks_; }
  std::size_t total_params() const { return total_params_; }

  /// Throws ShapeError unless theta has exactly total_params() entries.
  void check_parameters(const ParameterVector& theta) const;

 private:
  int n_;
  int k_;
  std::vector<BlockSpec> blocks_;
  std::size_t total_params_;
};

AnsatzCircuit build_mps_ansatz(int n, int k);

/// Number of generator coefficients of a width-w block, 4^w - 1.
std::size_t block_param_count(int w);

/// Lexicographic (I < X < Y < Z) label of generator `index` for width w;
/// the first character acts on the first qubit of the window.
std::string pauli_label(int w, std::size_t index);

/// Dense matrix of generator `index` for width w.
MatrixXc pauli_generator(int w, std::size_t index);

/// H = sum_j params_j G_j.
MatrixXc pauli_hamiltonian(const Eigen::Ref<const Eigen::VectorXd>& params, int w);

/// exp(-i sum_j params_j G_j), via eigendecomposition of the Hermitian generator.
DenseUnitary block_unitary(const Eigen::Ref<const Eigen::VectorXd>& params, int w);

/// Single-qubit unitary whose first column is (cos a, exp(-i b) sin a).
DenseUnitary product_rotation(double a, double b);

/// Generator coefficients reproducing `u` up to a global phase, through the
/// principal matrix logarithm. Inverse of block_unitary modulo phase.
Eigen::VectorXd generator_coefficients(const MatrixXc& u);

std::vector<DenseUnitary> block_unitaries(const AnsatzCircuit& circuit,
                                          const ParameterVector& theta);

/// U(theta)|0...0>.
Statevector prepare_state(const AnsatzCircuit& circuit, const ParameterVector& theta);

void apply_circuit(Statevector& state, const AnsatzCircuit& circuit,
                   const std::vector<DenseUnitary>& unitaries);

/// Applies U(theta)^dagger: block inverses in reverse order.
void apply_circuit_inverse(Statevector& state, const AnsatzCircuit& circuit,
                           const std::vector<DenseUnitary>& unitaries);

/// Maps parameters of a smaller-budget circuit onto a larger-budget circuit on
/// the same qubits so that both prepare the same state up to a global phase.
ParameterVector embed_parameters(const AnsatzCircuit& from, const ParameterVector& theta,
                                 const AnsatzCircuit& to);

/// Reduces every entry into [0, 2pi).
ParameterVector canonical_angles(const ParameterVector& theta);

// Resource formulas.

/// (r^2 - 3 log2 r - 1) / 4 CNOTs for a generic block of a rank-r network.
double cnot_lower_bound(std::int64_t r);

/// Entanglement generated by a depth-m circuit on n qubits: min(ceil(n/2), m).
int ebit_bound(int n, int m);

/// Nominal gate cost l * n * r^2 of l optimizer steps.
std::int64_t cost_estimate(std::int64_t n, std::int64_t r, std::int64_t l);

}  // namespace tnvqa
