#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "tnvqa/errors.hpp"
#include "tnvqa/simulator.hpp"

using namespace tnvqa;
using testing_support::random_state;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

DenseUnitary pauli_x() {
  MatrixXc m(2, 2);
  m << 0, 1, 1, 0;
  return DenseUnitary(m);
}

DenseUnitary hadamard() {
  MatrixXc m(2, 2);
  m << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
  return DenseUnitary(m);
}

}  // namespace

TEST(ZeroState, IsFirstBasisVector) {
  for (int n = 1; n <= 3; ++n) {
    const Statevector s = zero_state(n);
    ASSERT_EQ(s.dim(), std::size_t{1} << n);
    EXPECT_EQ(s[0], Complex(1.0));
    for (Eigen::Index x = 1; x < s.amplitudes().size(); ++x) EXPECT_EQ(s[x], Complex(0.0));
  }
}

TEST(ZeroState, RejectsUnsupportedSizes) {
  EXPECT_THROW(zero_state(0), CapacityError);
  EXPECT_THROW(zero_state(kMaxQubits + 1), CapacityError);
}

TEST(Statevector, RejectsNonPowerOfTwo) { EXPECT_THROW(Statevector(VectorXc::Ones(3)), ShapeError); }

TEST(ApplyBlock, IdentityLeavesStateUntouched) {
  const Statevector s = random_state(3, 1);
  const Statevector out = apply_block(s, DenseUnitary(MatrixXc::Identity(4, 4)), QubitWindow({0, 2}));
  EXPECT_LE((out.amplitudes() - s.amplitudes()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(ApplyBlock, XOnQubitZeroIsBigEndian) {
  const Statevector out = apply_block(zero_state(2), pauli_x(), QubitWindow({0}));
  EXPECT_EQ(out[2], Complex(1.0));
  EXPECT_EQ(out[0], Complex(0.0));
  EXPECT_EQ(out[1], Complex(0.0));
  EXPECT_EQ(out[3], Complex(0.0));
}

TEST(ApplyBlock, Hadamard) {
  const Statevector out = apply_block(zero_state(1), hadamard(), QubitWindow({0}));
  EXPECT_NEAR(out[0].real(), kInvSqrt2, 1e-15);
  EXPECT_NEAR(out[1].real(), kInvSqrt2, 1e-15);
}

TEST(ApplyBlock, MatchesKroneckerProduct) {
  // U on qubits (2, 0) of three qubits equals a permuted kron(U, I) product.
  const MatrixXc u = testing_support::random_unitary(4, 5);
  const Statevector s = random_state(3, 2);
  const Statevector out = apply_block(s, DenseUnitary(u), QubitWindow({2, 0}));
  VectorXc expected = VectorXc::Zero(8);
  for (int x = 0; x < 8; ++x) {
    const int b0 = (x >> 2) & 1, b1 = (x >> 1) & 1, b2 = x & 1;
    const int col = b2 * 2 + b0;
    for (int row = 0; row < 4; ++row) {
      const int y = ((row & 1) << 2) | (b1 << 1) | (row >> 1);
      expected[y] += u(row, col) * s[x];
    }
  }
  EXPECT_LE((out.amplitudes() - expected).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(ApplyBlock, Errors) {
  EXPECT_THROW(apply_block(zero_state(2), pauli_x(), QubitWindow({0, 1})), ShapeError);
  EXPECT_THROW(apply_block(zero_state(2), pauli_x(), QubitWindow({2})), RangeError);
  MatrixXc bad(2, 2);
  bad << 1, 1, 0, 1;
  EXPECT_THROW(DenseUnitary{bad}, ValidationError);
  EXPECT_THROW(QubitWindow({1, 1}), ArgumentError);
}

TEST(ProjectorProb, Examples) {
  for (int i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(projector_prob(zero_state(3), i), 1.0);
  const Statevector plus(VectorXc::Constant(2, kInvSqrt2));
  EXPECT_NEAR(projector_prob(plus, 0), 0.5, 1e-15);
  const Statevector ghz = testing_support::ghz(3);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(projector_prob(ghz, i), 0.5, 1e-15);
  EXPECT_THROW(projector_prob(ghz, 3), RangeError);
  EXPECT_THROW(projector_prob(ghz, -1), RangeError);
}

TEST(ProjectorProb, VectorFormAgrees) {
  const Statevector s = random_state(5, 9);
  const Eigen::VectorXd all = projector_probs(s);
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(all[i], projector_prob(s, i), 1e-15);
}

TEST(InnerProduct, Examples) {
  const Statevector phi = random_state(4, 3);
  EXPECT_NEAR(std::abs(inner_product(phi, phi) - Complex(1.0)), 0.0, 1e-14);
  const Statevector zero = zero_state(1);
  EXPECT_NEAR(std::abs(inner_product(zero, apply_block(zero, pauli_x(), QubitWindow({0})))), 0.0, 1e-15);
  EXPECT_NEAR(inner_product(zero, apply_block(zero, hadamard(), QubitWindow({0}))).real(), kInvSqrt2, 1e-15);
  EXPECT_THROW(inner_product(zero_state(1), zero_state(2)), ShapeError);
}

TEST(InnerProduct, ConjugatesFirstArgument) {
  const Statevector a(VectorXc::Constant(2, Complex(0, kInvSqrt2)));
  const Statevector b(VectorXc::Constant(2, Complex(kInvSqrt2, 0)));
  EXPECT_NEAR(std::abs(inner_product(a, b) - Complex(0, -1)), 0.0, 1e-15);
}

TEST(SampleProbs, Examples) {
  const Eigen::VectorXd p = sample_probs(zero_state(3), 100, 7);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(p[i], 1.0);

  const Statevector plus(VectorXc::Constant(2, kInvSqrt2));
  const Eigen::VectorXd a = sample_probs(plus, 1000000, 42);
  const Eigen::VectorXd b = sample_probs(plus, 1000000, 42);
  EXPECT_NEAR(a[0], 0.5, 0.005);
  EXPECT_EQ(a[0], b[0]);
  EXPECT_THROW(sample_probs(plus, 0, 1), ArgumentError);
}

TEST(FloatInstantiation, ApplyAndMeasure) {
  BasicStatevector<float> s = zero_state<float>(2);
  CMatrix<float> h(2, 2);
  const float r = static_cast<float>(kInvSqrt2);
  h << r, r, r, -r;
  apply_block_inplace(s, BasicDenseUnitary<float>(h), QubitWindow({1}));
  EXPECT_NEAR(projector_prob(s, 1), 0.5f, 1e-6f);
  EXPECT_NEAR(projector_prob(s, 0), 1.0f, 1e-6f);
}
