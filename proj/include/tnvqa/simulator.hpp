#pragma once

// Dense statevector simulation on n qubits.
//
// Basis ordering is big-endian: qubit 0 is the most significant bit, so the
// bitstring b_0 b_1 ... b_{n-1} has index sum_i b_i 2^{n-1-i}. Every module in
// the library relies on this convention.

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "tnvqa/errors.hpp"

namespace tnvqa {

template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using VectorXc = CVector<double>;
using MatrixXc = CMatrix<double>;

/// Largest qubit count accepted by the dense simulator.
inline constexpr int kMaxQubits = 20;

template <typename Real>
constexpr Real default_unitarity_tol() {
  return std::is_same_v<Real, float> ? Real(1e-4) : Real(1e-10);
}

inline std::size_t dimension_of(int n) { return std::size_t{1} << n; }

/// Returns the qubit count of a power-of-two dimension, or -1.
inline int qubits_for_dimension(Eigen::Index dim) {
  if (dim < 1) return -1;
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  return (Eigen::Index{1} << n) == dim ? n : -1;
}

inline void check_qubit_count(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw CapacityError("qubit count " + std::to_string(n) + " outside supported range [1, " +
                        std::to_string(kMaxQubits) + "]");
  }
}

template <typename Real>
class BasicStatevector {
 public:
  using Scalar = std::complex<Real>;
  using Vector = CVector<Real>;

  explicit BasicStatevector(Vector amplitudes) : amps_(std::move(amplitudes)) {
    n_ = qubits_for_dimension(amps_.size());
    if (n_ < 1) {
      throw ShapeError("amplitude vector length " + std::to_string(amps_.size()) +
                       " is not a power of two >= 2");
    }
    check_qubit_count(n_);
  }

  int num_qubits() const { return n_; }
  Eigen::Index dim() const { return amps_.size(); }
  const Vector& amplitudes() const { return amps_; }
  Vector& amplitudes() { return amps_; }
  Scalar operator[](Eigen::Index i) const { return amps_[i]; }
  Real norm() const { return amps_.norm(); }

 private:
  int n_ = 0;
  Vector amps_;
};

using Statevector = BasicStatevector<double>;

/// Ordered, distinct target qubits of a block. The first target is the most
/// significant bit of the block's local index.
class QubitWindow {
 public:
  explicit QubitWindow(std::vector<int> targets) : targets_(std::move(targets)) {
    if (targets_.empty()) throw ArgumentError("qubit window must contain at least one qubit");
    std::vector<int> sorted = targets_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 0) throw RangeError("negative qubit index in window");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ArgumentError("qubit window has repeated indices");
    }
  }

  static QubitWindow contiguous(int first, int width) {
    std::vector<int> t(width);
    for (int j = 0; j < width; ++j) t[j] = first + j;
    return QubitWindow(std::move(t));
  }

  const std::vector<int>& targets() const { return targets_; }
  int width() const { return static_cast<int>(targets_.size()); }

  void validate_for(int n) const {
    for (int q : targets_) {
      if (q >= n) {
        throw RangeError("window qubit " + std::to_string(q) + " out of range for " +
                         std::to_string(n) + " qubits");
      }
    }
  }

 private:
  std::vector<int> targets_;
};

/// Unitary on 2^w dimensional block space, validated once at construction.
template <typename Real>
class BasicDenseUnitary {
 public:
  using Matrix = CMatrix<Real>;

  explicit BasicDenseUnitary(Matrix m, Real tol = default_unitarity_tol<Real>())
      : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw ShapeError("unitary must be square");
    width_ = qubits_for_dimension(m_.rows());
    if (width_ < 1) throw ShapeError("unitary dimension is not a power of two >= 2");
    const Real defect = (m_.adjoint() * m_ - Matrix::Identity(m_.rows(), m_.cols())).norm();
    if (!(defect <= tol)) {
      throw ValidationError("matrix is not unitary: ||U^H U - I||_F = " + std::to_string(defect));
    }
  }

  int width() const { return width_; }
  Eigen::Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }

  /// The inverse block; already known to be unitary, so not re-validated.
  BasicDenseUnitary adjoint() const { return BasicDenseUnitary(m_.adjoint(), width_); }

 private:
  BasicDenseUnitary(Matrix m, int width) : width_(width), m_(std::move(m)) {}

  int width_ = 0;
  Matrix m_;
};

using DenseUnitary = BasicDenseUnitary<double>;

template <typename Real = double>
BasicStatevector<Real> zero_state(int n) {
  check_qubit_count(n);
  CVector<Real> a = CVector<Real>::Zero(static_cast<Eigen::Index>(dimension_of(n)));
  a[0] = Real(1);
  return BasicStatevector<Real>(std::move(a));
}

template <typename Real = double>
BasicStatevector<Real> basis_state(int n, std::uint64_t index) {
  check_qubit_count(n);
  if (index >= dimension_of(n)) throw RangeError("basis index out of range");
  CVector<Real> a = CVector<Real>::Zero(static_cast<Eigen::Index>(dimension_of(n)));
  a[static_cast<Eigen::Index>(index)] = Real(1);
  return BasicStatevector<Real>(std::move(a));
}

/// Bit mask selecting qubit q of an n-qubit basis index.
inline std::uint64_t qubit_mask(int n, int q) { return std::uint64_t{1} << (n - 1 - q); }

/// Applies u to the window in place; identity on all other qubits.
template <typename Real>
void apply_block_inplace(BasicStatevector<Real>& state, const BasicDenseUnitary<Real>& u,
                         const QubitWindow& w) {
  const int n = state.num_qubits();
  w.validate_for(n);
  if (u.width() != w.width()) {
    throw ShapeError("block of width " + std::to_string(u.width()) + " applied to window of width " +
                     std::to_string(w.width()));
  }
  const int width = w.width();
  const Eigen::Index local_dim = u.dim();

  std::uint64_t target_mask = 0;
  std::vector<std::uint64_t> offsets(static_cast<std::size_t>(local_dim), 0);
  for (int j = 0; j < width; ++j) {
    const std::uint64_t bit = qubit_mask(n, w.targets()[j]);
    target_mask |= bit;
    for (Eigen::Index l = 0; l < local_dim; ++l) {
      if ((l >> (width - 1 - j)) & 1) offsets[static_cast<std::size_t>(l)] |= bit;
    }
  }

  auto& amps = state.amplitudes();
  CVector<Real> slice(local_dim);
  CVector<Real> out(local_dim);
  const std::uint64_t dim = dimension_of(n);
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & target_mask) continue;
    for (Eigen::Index l = 0; l < local_dim; ++l) {
      slice[l] = amps[static_cast<Eigen::Index>(base | offsets[static_cast<std::size_t>(l)])];
    }
    out.noalias() = u.matrix() * slice;
    for (Eigen::Index l = 0; l < local_dim; ++l) {
      amps[static_cast<Eigen::Index>(base | offsets[static_cast<std::size_t>(l)])] = out[l];
    }
  }
}

template <typename Real>
BasicStatevector<Real> apply_block(BasicStatevector<Real> state, const BasicDenseUnitary<Real>& u,
                                   const QubitWindow& w) {
  apply_block_inplace(state, u, w);
  return state;
}

/// <psi| P_i |psi> with P_i = |0><0| on qubit i.
template <typename Real>
Real projector_prob(const BasicStatevector<Real>& state, int i) {
  const int n = state.num_qubits();
  if (i < 0 || i >= n) {
    throw RangeError("qubit index " + std::to_string(i) + " out of range for " +
                     std::to_string(n) + " qubits");
  }
  const std::uint64_t mask = qubit_mask(n, i);
  Real p = 0;
  const auto& a = state.amplitudes();
  for (Eigen::Index x = 0; x < a.size(); ++x) {
    if (!(static_cast<std::uint64_t>(x) & mask)) p += std::norm(a[x]);
  }
  return p;
}

/// All n projector probabilities in a single pass.
template <typename Real>
RVector<Real> projector_probs(const BasicStatevector<Real>& state) {
  const int n = state.num_qubits();
  RVector<Real> p = RVector<Real>::Zero(n);
  const auto& a = state.amplitudes();
  for (Eigen::Index x = 0; x < a.size(); ++x) {
    const Real w = std::norm(a[x]);
    for (int i = 0; i < n; ++i) {
      if (!(static_cast<std::uint64_t>(x) & qubit_mask(n, i))) p[i] += w;
    }
  }
  return p;
}

/// sum_x conj(a_x) b_x
template <typename Real>
std::complex<Real> inner_product(const BasicStatevector<Real>& a, const BasicStatevector<Real>& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw ShapeError("inner product of states with different qubit counts");
  }
  return a.amplitudes().dot(b.amplitudes());
}

/// Shot-sampled estimates of every projector probability. Full bitstrings are
/// drawn from |a_x|^2, and p_i is the fraction of shots with qubit i in |0>.
/// Reproducible for a fixed (seed, shots) within one standard library.
template <typename Real>
RVector<Real> sample_probs(const BasicStatevector<Real>& state, std::uint64_t shots,
                           std::uint64_t seed) {
  if (shots == 0) throw ArgumentError("shots must be >= 1");
  const int n = state.num_qubits();
  const auto& a = state.amplitudes();
  std::vector<double> weights(static_cast<std::size_t>(a.size()));
  for (Eigen::Index x = 0; x < a.size(); ++x) weights[static_cast<std::size_t>(x)] = std::norm(a[x]);

  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::uint64_t> outcome(weights.begin(), weights.end());
  std::vector<std::uint64_t> zeros(static_cast<std::size_t>(n), 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const std::uint64_t x = outcome(rng);
    for (int i = 0; i < n; ++i) {
      if (!(x & qubit_mask(n, i))) ++zeros[static_cast<std::size_t>(i)];
    }
  }
  RVector<Real> p(n);
  for (int i = 0; i < n; ++i) {
    p[i] = static_cast<Real>(static_cast<double>(zeros[static_cast<std::size_t>(i)]) /
                             static_cast<double>(shots));
  }
  return p;
}

}  // namespace tnvqa
