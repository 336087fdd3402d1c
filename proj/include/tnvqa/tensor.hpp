#pragma once

// Open-boundary matrix product states and bipartite entanglement analysis.
//
// Site i holds two bond matrices A_i^0, A_i^1 of shape (chi_{i-1}, chi_i) with
// chi_{-1} = chi_{n-1} = 1, so that
//   <s_0 ... s_{n-1}|psi> = A_0^{s_0} A_1^{s_1} ... A_{n-1}^{s_{n-1}}.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "tnvqa/simulator.hpp"

namespace tnvqa {

template <typename Real>
constexpr Real default_svd_tol() {
  return std::is_same_v<Real, float> ? Real(1e-5) : Real(1e-10);
}

template <typename Real>
class BasicMpsState {
 public:
  using Matrix = CMatrix<Real>;
  using Site = std::array<Matrix, 2>;

  explicit BasicMpsState(std::vector<Site> sites) : sites_(std::move(sites)) {
    if (sites_.empty()) throw ShapeError("MPS needs at least one site");
    check_qubit_count(static_cast<int>(sites_.size()));
    for (std::size_t i = 0; i < sites_.size(); ++i) {
      const Site& s = sites_[i];
      if (s[0].rows() != s[1].rows() || s[0].cols() != s[1].cols()) {
        throw ShapeError("site " + std::to_string(i) + ": physical slices differ in shape");
      }
      if (s[0].rows() < 1 || s[0].cols() < 1) throw ShapeError("site " + std::to_string(i) + ": empty bond");
      if (i > 0 && sites_[i - 1][0].cols() != s[0].rows()) {
        throw ShapeError("bond " + std::to_string(i - 1) + ": dimensions " +
                         std::to_string(sites_[i - 1][0].cols()) + " and " + std::to_string(s[0].rows()) +
                         " do not match");
      }
    }
    if (sites_.front()[0].rows() != 1) throw ShapeError("left boundary bond must be 1");
    if (sites_.back()[0].cols() != 1) throw ShapeError("right boundary bond must be 1");
  }

  int num_sites() const { return static_cast<int>(sites_.size()); }
  const std::vector<Site>& sites() const { return sites_; }
  const Site& site(int i) const { return sites_[static_cast<std::size_t>(i)]; }

  /// The n-1 internal bond dimensions.
  std::vector<int> bond_dims() const {
    std::vector<int> b;
    for (std::size_t i = 0; i + 1 < sites_.size(); ++i) b.push_back(static_cast<int>(sites_[i][0].cols()));
    return b;
  }

  int max_bond() const {
    const auto b = bond_dims();
    return b.empty() ? 1 : *std::max_element(b.begin(), b.end());
  }

 private:
  std::vector<Site> sites_;
};

using MpsState = BasicMpsState<double>;

template <typename Real>
struct BasicSchmidtData {
  int cut = 1;
  RVector<Real> singular_values;
  int rank_eps = 0;
};

using SchmidtData = BasicSchmidtData<double>;

namespace detail {

template <typename Real>
using RowMajorMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Amplitudes reshaped as a 2^cut x 2^{n-cut} matrix (big-endian: left qubits index rows).
template <typename Real>
CMatrix<Real> cut_matrix(const BasicStatevector<Real>& state, int cut) {
  const Eigen::Index rows = Eigen::Index{1} << cut;
  const Eigen::Index cols = Eigen::Index{1} << (state.num_qubits() - cut);
  return Eigen::Map<const RowMajorMatrix<Real>>(state.amplitudes().data(), rows, cols);
}

template <typename Real>
int count_above(const RVector<Real>& s, Real tol) {
  return static_cast<int>((s.array() > tol).count());
}

// Left-to-right SVD sweep. Keeps at most max_keep values per bond and drops
// those <= tol (always keeping one). Returns the sites and the largest
// singular value dropped, measured on the normalized remainder.
template <typename Real>
std::pair<std::vector<typename BasicMpsState<Real>::Site>, Real> svd_sweep(
    const BasicStatevector<Real>& state, Real tol, int max_keep, bool renormalize) {
  using Matrix = CMatrix<Real>;
  const int n = state.num_qubits();
  std::vector<typename BasicMpsState<Real>::Site> sites;
  sites.reserve(static_cast<std::size_t>(n));
  Real dropped = 0;

  // remainder: bond x 2^{n-i}, row-major over the remaining qubits.
  Matrix remainder = cut_matrix(state, 0);
  for (int i = 0; i < n; ++i) {
    const Eigen::Index bond = remainder.rows();
    const Eigen::Index rest = remainder.cols() / 2;
    Matrix m(bond * 2, rest);
    for (Eigen::Index b = 0; b < bond; ++b) {
      m.row(b * 2) = remainder.row(b).head(rest);
      m.row(b * 2 + 1) = remainder.row(b).tail(rest);
    }
    if (i == n - 1) {
      typename BasicMpsState<Real>::Site site{Matrix(bond, 1), Matrix(bond, 1)};
      for (Eigen::Index b = 0; b < bond; ++b) {
        site[0](b, 0) = m(b * 2, 0);
        site[1](b, 0) = m(b * 2 + 1, 0);
      }
      sites.push_back(std::move(site));
      break;
    }
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RVector<Real>& s = svd.singularValues();
    const Real total = s.norm();
    Eigen::Index keep = std::max<Eigen::Index>(1, (s.array() > tol * total).count());
    keep = std::min<Eigen::Index>(keep, max_keep);
    if (keep < s.size() && total > 0) dropped = std::max(dropped, s[keep] / total);

    typename BasicMpsState<Real>::Site site{Matrix(bond, keep), Matrix(bond, keep)};
    for (Eigen::Index b = 0; b < bond; ++b) {
      site[0].row(b) = svd.matrixU().row(b * 2).head(keep);
      site[1].row(b) = svd.matrixU().row(b * 2 + 1).head(keep);
    }
    sites.push_back(std::move(site));
    remainder = s.head(keep).template cast<std::complex<Real>>().asDiagonal() *
                svd.matrixV().leftCols(keep).adjoint();
    if (renormalize) {
      const Real norm = remainder.norm();
      if (norm > 0) remainder /= norm;
    }
  }
  return {std::move(sites), dropped};
}

}  // namespace detail

/// Left-canonical MPS by sequential SVD, discarding singular values <= tol
/// (relative to the norm of the remainder at each cut).
template <typename Real>
BasicMpsState<Real> statevector_to_mps(const BasicStatevector<Real>& state,
                                       Real tol = default_svd_tol<Real>()) {
  return BasicMpsState<Real>(detail::svd_sweep(state, tol, kMaxQubits * 64, false).first);
}

template <typename Real>
BasicStatevector<Real> mps_to_statevector(const BasicMpsState<Real>& mps) {
  using Matrix = CMatrix<Real>;
  // Rows: basis index of the sites contracted so far; columns: open bond.
  Matrix partial = Matrix::Ones(1, 1);
  for (const auto& site : mps.sites()) {
    Matrix next(partial.rows() * 2, site[0].cols());
    for (Eigen::Index x = 0; x < partial.rows(); ++x) {
      next.row(x * 2) = partial.row(x) * site[0];
      next.row(x * 2 + 1) = partial.row(x) * site[1];
    }
    partial = std::move(next);
  }
  return BasicStatevector<Real>(partial.col(0));
}

/// Largest ||sum_s A^s^dagger A^s - I||_F over all sites.
template <typename Real>
Real left_canonical_defect(const BasicMpsState<Real>& mps) {
  Real worst = 0;
  for (const auto& site : mps.sites()) {
    const CMatrix<Real> g = site[0].adjoint() * site[0] + site[1].adjoint() * site[1];
    worst = std::max(worst, (g - CMatrix<Real>::Identity(g.rows(), g.cols())).norm());
  }
  return worst;
}

template <typename Real>
BasicSchmidtData<Real> schmidt_spectrum(const BasicStatevector<Real>& state, int cut,
                                        Real tol = default_svd_tol<Real>()) {
  const int n = state.num_qubits();
  if (cut < 1 || cut > n - 1) {
    throw RangeError("cut " + std::to_string(cut) + " outside [1, " + std::to_string(n - 1) + "]");
  }
  Eigen::JacobiSVD<CMatrix<Real>> svd(detail::cut_matrix(state, cut));
  BasicSchmidtData<Real> out;
  out.cut = cut;
  out.singular_values = svd.singularValues();
  out.rank_eps = detail::count_above(out.singular_values, tol);
  return out;
}

/// Maximum Schmidt number over the n-1 contiguous cuts.
template <typename Real>
int rank(const BasicStatevector<Real>& state, Real tol = default_svd_tol<Real>()) {
  int r = 1;
  for (int cut = 1; cut < state.num_qubits(); ++cut) r = std::max(r, schmidt_spectrum(state, cut, tol).rank_eps);
  return r;
}

template <typename Real>
Real entropy_ebits(const RVector<Real>& singular_values) {
  Real h = 0;
  for (Eigen::Index j = 0; j < singular_values.size(); ++j) {
    const Real w = singular_values[j] * singular_values[j];
    if (w > 0) h -= w * std::log2(w);
  }
  return h;
}

/// Von Neumann entropy of the cut, in ebits.
template <typename Real>
Real entanglement_ebits(const BasicStatevector<Real>& state, int cut) {
  return entropy_ebits(schmidt_spectrum(state, cut).singular_values);
}

template <typename Real>
struct BasicTruncation {
  BasicMpsState<Real> mps;
  Real eps = 0;   // largest discarded singular value
  Real err1 = 0;  // trace distance 2 sqrt(1 - F)
  Real err2 = 0;  // infidelity 1 - F
};

using Truncation = BasicTruncation<double>;

/// Truncates every bond to at most r singular values and renormalizes. The
/// error figures compare the contracted states before and after.
template <typename Real>
BasicTruncation<Real> truncate(const BasicMpsState<Real>& mps, int r) {
  if (r < 1) throw ArgumentError("target rank must be >= 1");
  if (r >= mps.max_bond()) return {mps, Real(0), Real(0), Real(0)};

  const BasicStatevector<Real> original = mps_to_statevector(mps);
  auto [sites, eps] = detail::svd_sweep(original, Real(0), r, true);
  BasicMpsState<Real> truncated(std::move(sites));
  BasicStatevector<Real> approx = mps_to_statevector(truncated);

  const Real fidelity = std::min(Real(1), std::norm(inner_product(original, approx)) /
                                              (original.amplitudes().squaredNorm() *
                                               approx.amplitudes().squaredNorm()));
  const Real infidelity = std::max(Real(0), Real(1) - fidelity);
  return {std::move(truncated), eps, Real(2) * std::sqrt(infidelity), infidelity};
}

}  // namespace tnvqa
