#include "tnvqa/ansatz.hpp"

#include <Eigen/Eigenvalues>

#include <bit>
#include <cmath>
#include <numbers>

namespace tnvqa {

namespace {

// Pauli string as a monomial matrix: G|s> = phase(s) |s ^ flip>, with
// phase(s) = i^{num_y} (-1)^{popcount(s & sign)}.
struct PauliString {
  std::uint64_t flip = 0;
  std::uint64_t sign = 0;
  int num_y = 0;
};

PauliString decode_pauli(int w, std::size_t index) {
  // index counts from 0 over non-identity strings; digit value is index+1 in base 4.
  const std::size_t code = index + 1;
  PauliString p;
  for (int q = 0; q < w; ++q) {
    const unsigned digit = (code >> (2 * (w - 1 - q))) & 3u;
    const std::uint64_t bit = std::uint64_t{1} << (w - 1 - q);
    switch (digit) {
      case 1:  // X
        p.flip |= bit;
        break;
      case 2:  // Y
        p.flip |= bit;
        p.sign |= bit;
        ++p.num_y;
        break;
      case 3:  // Z
        p.sign |= bit;
        break;
      default:
        break;
    }
  }
  return p;
}

Complex pauli_phase(const PauliString& p, std::uint64_t s) {
  static constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  Complex phase = kIPow[p.num_y % 4];
  return (std::popcount(s & p.sign) & 1) ? -phase : phase;
}

void check_width(int w) {
  if (w < 1 || w > kMaxBlockWidth) {
    throw CapacityError("block width " + std::to_string(w) + " outside supported range [1, " +
                        std::to_string(kMaxBlockWidth) + "]");
  }
}

// kron(I_left, u, I_right) placing a width-`uw` unitary at `offset` qubits
// into a width-`w` window.
MatrixXc embed_in_window(const MatrixXc& u, int offset, int w) {
  const int uw = qubits_for_dimension(u.rows());
  const Eigen::Index left = Eigen::Index{1} << offset;
  const Eigen::Index right = Eigen::Index{1} << (w - offset - uw);
  const Eigen::Index d = Eigen::Index{1} << w;
  MatrixXc out = MatrixXc::Zero(d, d);
  for (Eigen::Index a = 0; a < left; ++a) {
    for (Eigen::Index r = 0; r < u.rows(); ++r) {
      for (Eigen::Index c = 0; c < u.cols(); ++c) {
        for (Eigen::Index b = 0; b < right; ++b) {
          out((a * u.rows() + r) * right + b, (a * u.cols() + c) * right + b) = u(r, c);
        }
      }
    }
  }
  return out;
}

MatrixXc block_matrix(const AnsatzCircuit& circuit, const BlockSpec& block,
                      const ParameterVector& theta) {
  if (circuit.is_product()) {
    return product_rotation(theta[static_cast<Eigen::Index>(block.param_offset)],
                            theta[static_cast<Eigen::Index>(block.param_offset + 1)])
        .matrix();
  }
  return block_unitary(theta.segment(static_cast<Eigen::Index>(block.param_offset),
                                     static_cast<Eigen::Index>(block.param_len)),
                       block.window.width())
      .matrix();
}

}  // namespace

void AnsatzCircuit::check_parameters(const ParameterVector& theta) const {
  if (static_cast<std::size_t>(theta.size()) != total_params_) {
    throw ShapeError("parameter vector has " + std::to_string(theta.size()) + " entries, circuit needs " +
                     std::to_string(total_params_));
  }
}

std::size_t block_param_count(int w) {
  check_width(w);
  return (std::size_t{1} << (2 * w)) - 1;
}

AnsatzCircuit build_mps_ansatz(int n, int k) {
  if (n < 1) throw ArgumentError("ansatz needs at least 1 qubit");
  check_qubit_count(n);
  if (k < 0 || k > n / 2) {
    throw ArgumentError("ebit budget " + std::to_string(k) + " outside [0, floor(n/2)] for n = " +
                        std::to_string(n));
  }
  std::vector<BlockSpec> blocks;
  std::size_t offset = 0;
  if (k == 0) {
    for (int q = 0; q < n; ++q) {
      blocks.push_back({QubitWindow::contiguous(q, 1), offset, 2});
      offset += 2;
    }
  } else {
    const int w = k + 1;
    const std::size_t len = block_param_count(w);
    for (int j = 0; j < n - k; ++j) {
      blocks.push_back({QubitWindow::contiguous(j, w), offset, len});
      offset += len;
    }
  }
  return AnsatzCircuit(n, k, std::move(blocks), offset);
}

std::string pauli_label(int w, std::size_t index) {
  if (index >= block_param_count(w)) throw RangeError("Pauli generator index out of range");
  static constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};
  std::string label(static_cast<std::size_t>(w), 'I');
  const std::size_t code = index + 1;
  for (int q = 0; q < w; ++q) label[static_cast<std::size_t>(q)] = kLetters[(code >> (2 * (w - 1 - q))) & 3u];
  return label;
}

MatrixXc pauli_generator(int w, std::size_t index) {
  if (index >= block_param_count(w)) throw RangeError("Pauli generator index out of range");
  const PauliString p = decode_pauli(w, index);
  const Eigen::Index d = Eigen::Index{1} << w;
  MatrixXc g = MatrixXc::Zero(d, d);
  for (Eigen::Index s = 0; s < d; ++s) {
    const auto su = static_cast<std::uint64_t>(s);
    g(static_cast<Eigen::Index>(su ^ p.flip), s) = pauli_phase(p, su);
  }
  return g;
}

MatrixXc pauli_hamiltonian(const Eigen::Ref<const Eigen::VectorXd>& params, int w) {
  const std::size_t count = block_param_count(w);
  if (static_cast<std::size_t>(params.size()) != count) {
    throw ShapeError("width-" + std::to_string(w) + " block needs " + std::to_string(count) +
                     " parameters, got " + std::to_string(params.size()));
  }
  const Eigen::Index d = Eigen::Index{1} << w;
  MatrixXc h = MatrixXc::Zero(d, d);
  for (std::size_t j = 0; j < count; ++j) {
    const double c = params[static_cast<Eigen::Index>(j)];
    if (c == 0.0) continue;
    const PauliString p = decode_pauli(w, j);
    for (Eigen::Index s = 0; s < d; ++s) {
      const auto su = static_cast<std::uint64_t>(s);
      h(static_cast<Eigen::Index>(su ^ p.flip), s) += c * pauli_phase(p, su);
    }
  }
  return h;
}

DenseUnitary block_unitary(const Eigen::Ref<const Eigen::VectorXd>& params, int w) {
  const MatrixXc h = pauli_hamiltonian(params, w);
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(h);
  const VectorXc phases =
      es.eigenvalues().unaryExpr([](double lambda) { return std::polar(1.0, -lambda); });
  return DenseUnitary(es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint());
}

DenseUnitary product_rotation(double a, double b) {
  const double c = std::cos(a);
  const double s = std::sin(a);
  MatrixXc u(2, 2);
  u << c, -std::polar(s, b), std::polar(s, -b), c;
  return DenseUnitary(std::move(u));
}

Eigen::VectorXd generator_coefficients(const MatrixXc& u) {
  const int w = qubits_for_dimension(u.rows());
  if (w < 1 || u.rows() != u.cols()) throw ShapeError("generator_coefficients needs a 2^w square matrix");
  const std::size_t count = block_param_count(w);
  const Eigen::Index d = u.rows();

  // A unitary is normal, so its complex Schur form is diagonal.
  Eigen::ComplexSchur<MatrixXc> schur(u);
  const MatrixXc& z = schur.matrixU();
  Eigen::VectorXd angles(d);
  for (Eigen::Index i = 0; i < d; ++i) angles[i] = -std::arg(schur.matrixT()(i, i));
  angles.array() -= angles.mean();
  const MatrixXc h = z * angles.cast<Complex>().asDiagonal() * z.adjoint();

  Eigen::VectorXd params(static_cast<Eigen::Index>(count));
  for (std::size_t j = 0; j < count; ++j) {
    const PauliString p = decode_pauli(w, j);
    Complex tr = 0;
    for (Eigen::Index s = 0; s < d; ++s) {
      const auto su = static_cast<std::uint64_t>(s);
      tr += pauli_phase(p, su) * h(s, static_cast<Eigen::Index>(su ^ p.flip));
    }
    params[static_cast<Eigen::Index>(j)] = tr.real() / static_cast<double>(d);
  }
  return params;
}

std::vector<DenseUnitary> block_unitaries(const AnsatzCircuit& circuit,
                                          const ParameterVector& theta) {
  circuit.check_parameters(theta);
  std::vector<DenseUnitary> out;
  out.reserve(circuit.blocks().size());
  for (const BlockSpec& b : circuit.blocks()) {
    if (circuit.is_product()) {
      out.push_back(product_rotation(theta[static_cast<Eigen::Index>(b.param_offset)],
                                     theta[static_cast<Eigen::Index>(b.param_offset + 1)]));
    } else {
      out.push_back(block_unitary(theta.segment(static_cast<Eigen::Index>(b.param_offset),
                                                static_cast<Eigen::Index>(b.param_len)),
                                  b.window.width()));
    }
  }
  return out;
}

void apply_circuit(Statevector& state, const AnsatzCircuit& circuit,
                   const std::vector<DenseUnitary>& unitaries) {
  if (state.num_qubits() != circuit.num_qubits()) throw ShapeError("circuit and state qubit counts differ");
  for (std::size_t j = 0; j < circuit.blocks().size(); ++j) {
    apply_block_inplace(state, unitaries[j], circuit.blocks()[j].window);
  }
}

void apply_circuit_inverse(Statevector& state, const AnsatzCircuit& circuit,
                           const std::vector<DenseUnitary>& unitaries) {
  if (state.num_qubits() != circuit.num_qubits()) throw ShapeError("circuit and state qubit counts differ");
  for (std::size_t j = circuit.blocks().size(); j-- > 0;) {
    apply_block_inplace(state, unitaries[j].adjoint(), circuit.blocks()[j].window);
  }
}

Statevector prepare_state(const AnsatzCircuit& circuit, const ParameterVector& theta) {
  Statevector state = zero_state(circuit.num_qubits());
  apply_circuit(state, circuit, block_unitaries(circuit, theta));
  return state;
}

ParameterVector embed_parameters(const AnsatzCircuit& from, const ParameterVector& theta,
                                 const AnsatzCircuit& to) {
  from.check_parameters(theta);
  if (from.num_qubits() != to.num_qubits()) throw ShapeError("embedding needs equal qubit counts");
  if (from.ebits() > to.ebits()) throw ArgumentError("cannot embed into a smaller ebit budget");
  if (from.ebits() == to.ebits()) return theta;
  if (to.is_product()) throw ArgumentError("target circuit must have k >= 1");

  const int w = to.blocks().front().window.width();
  const Eigen::Index d = Eigen::Index{1} << w;
  const auto last = static_cast<int>(to.blocks().size()) - 1;
  std::vector<MatrixXc> merged(to.blocks().size(), MatrixXc::Identity(d, d));

  // Old block starting at qubit s goes into new block min(s, last), whose
  // window contains it; assignment is monotone so the product order holds.
  for (const BlockSpec& b : from.blocks()) {
    const int start = b.window.targets().front();
    const int target = std::min(start, last);
    const int offset = start - to.blocks()[static_cast<std::size_t>(target)].window.targets().front();
    merged[static_cast<std::size_t>(target)] =
        embed_in_window(block_matrix(from, b, theta), offset, w) * merged[static_cast<std::size_t>(target)];
  }

  ParameterVector out(static_cast<Eigen::Index>(to.total_params()));
  for (std::size_t j = 0; j < to.blocks().size(); ++j) {
    const BlockSpec& b = to.blocks()[j];
    out.segment(static_cast<Eigen::Index>(b.param_offset), static_cast<Eigen::Index>(b.param_len)) =
        generator_coefficients(merged[j]);
  }
  return out;
}

ParameterVector canonical_angles(const ParameterVector& theta) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  return theta.unaryExpr([](double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0) r += kTwoPi;
    return r >= kTwoPi ? 0.0 : r;
  });
}

double cnot_lower_bound(std::int64_t r) {
  if (r < 2 || !std::has_single_bit(static_cast<std::uint64_t>(r))) {
    throw ArgumentError("rank " + std::to_string(r) + " is not a power of two >= 2");
  }
  const double rr = static_cast<double>(r);
  return 0.25 * (rr * rr - 3.0 * std::log2(rr) - 1.0);
}

int ebit_bound(int n, int m) {
  if (n < 1 || m < 0) throw ArgumentError("ebit_bound needs n >= 1 and m >= 0");
  return std::min((n + 1) / 2, m);
}

std::int64_t cost_estimate(std::int64_t n, std::int64_t r, std::int64_t l) {
  if (n < 1 || r < 1 || l < 1) throw ArgumentError("cost_estimate inputs must be >= 1");
  return l * n * r * r;
}

}  // namespace tnvqa
