#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "tnvqa/simulator.hpp"

namespace testing_support {

using tnvqa::Complex;
using tnvqa::MatrixXc;
using tnvqa::Statevector;
using tnvqa::VectorXc;

inline Statevector random_state(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  VectorXc a(static_cast<Eigen::Index>(tnvqa::dimension_of(n)));
  for (auto& x : a) x = Complex(g(rng), g(rng));
  return Statevector(a / a.norm());
}

inline MatrixXc random_unitary(Eigen::Index d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  MatrixXc m(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<MatrixXc> qr(m);
  return qr.householderQ();
}

inline Statevector ghz(int n) {
  VectorXc a = VectorXc::Zero(static_cast<Eigen::Index>(tnvqa::dimension_of(n)));
  a[0] = a[a.size() - 1] = 1.0 / std::sqrt(2.0);
  return Statevector(a);
}

template <std::size_t N>
VectorXc complex_from(const double (&re)[N], const double (&im)[N]) {
  VectorXc v(static_cast<Eigen::Index>(N));
  for (std::size_t i = 0; i < N; ++i) v[static_cast<Eigen::Index>(i)] = Complex(re[i], im[i]);
  return v;
}

template <std::size_t N>
MatrixXc square_from(const double (&re)[N], const double (&im)[N]) {
  const auto d = static_cast<Eigen::Index>(std::lround(std::sqrt(static_cast<double>(N))));
  MatrixXc m(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) m(r, c) = Complex(re[r * d + c], im[r * d + c]);
  return m;
}

/// |<a|b>|^2 for unit vectors, insensitive to global phase.
inline double overlap(const VectorXc& a, const VectorXc& b) { return std::norm(a.dot(b)); }

}  // namespace testing_support
