#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "reference/reference_values.hpp"
#include "support.hpp"
#include "tnvqa/errors.hpp"
#include "tnvqa/tensor.hpp"

using namespace tnvqa;
using testing_support::ghz;
using testing_support::overlap;
using testing_support::random_state;

namespace {

Statevector bell() { return ghz(2); }

Statevector formula_state(int n) {
  VectorXc a(static_cast<Eigen::Index>(dimension_of(n)));
  for (Eigen::Index x = 0; x < a.size(); ++x) {
    const double d = static_cast<double>(x);
    a[x] = Complex(std::sin(0.7 * d + 0.3), std::cos(1.3 * d * d + 0.1));
  }
  return Statevector(a / a.norm());
}

Statevector product_state() {
  VectorXc q(2);
  q << Complex(0.6, 0), Complex(0, 0.8);
  VectorXc a(8);
  for (int x = 0; x < 8; ++x) a[x] = q[(x >> 2) & 1] * q[(x >> 1) & 1] * q[x & 1];
  return Statevector(a);
}

}  // namespace

TEST(StatevectorToMps, BondDimensions) {
  EXPECT_EQ(statevector_to_mps(product_state()).bond_dims(), (std::vector<int>{1, 1}));
  EXPECT_EQ(statevector_to_mps(bell()).bond_dims(), (std::vector<int>{2}));
  EXPECT_EQ(statevector_to_mps(ghz(4)).bond_dims(), (std::vector<int>{2, 2, 2}));
}

TEST(MpsToStatevector, ProductOfZeros) {
  std::vector<MpsState::Site> sites;
  for (int i = 0; i < 3; ++i) sites.push_back({MatrixXc::Ones(1, 1), MatrixXc::Zero(1, 1)});
  EXPECT_EQ(mps_to_statevector(MpsState(sites)).amplitudes(), zero_state(3).amplitudes());
}

TEST(MpsToStatevector, RoundTrips) {
  EXPECT_LE((mps_to_statevector(statevector_to_mps(bell())).amplitudes() - bell().amplitudes()).norm(), 1e-12);
  const Statevector s = random_state(5, 4);
  const MpsState m = statevector_to_mps(s);
  EXPECT_GE(overlap(mps_to_statevector(m).amplitudes(), s.amplitudes()), 1 - 1e-10);
  EXPECT_LE(left_canonical_defect(m), 1e-10);
}

TEST(MpsState, RejectsInconsistentBonds) {
  std::vector<MpsState::Site> sites;
  sites.push_back({MatrixXc::Ones(1, 2), MatrixXc::Zero(1, 2)});
  sites.push_back({MatrixXc::Ones(3, 1), MatrixXc::Zero(3, 1)});
  EXPECT_THROW(MpsState{sites}, ShapeError);
  std::vector<MpsState::Site> open;
  open.push_back({MatrixXc::Ones(1, 2), MatrixXc::Zero(1, 2)});
  EXPECT_THROW(MpsState{open}, ShapeError);
}

TEST(SchmidtSpectrum, Examples) {
  const SchmidtData p = schmidt_spectrum(product_state(), 1);
  EXPECT_NEAR(p.singular_values[0], 1.0, 1e-14);
  EXPECT_EQ(p.rank_eps, 1);
  const SchmidtData b = schmidt_spectrum(bell(), 1);
  EXPECT_NEAR(b.singular_values[0], 0.70710678, 1e-8);
  EXPECT_NEAR(b.singular_values[1], 0.70710678, 1e-8);
  EXPECT_THROW(schmidt_spectrum(bell(), 0), RangeError);
  EXPECT_THROW(schmidt_spectrum(bell(), 2), RangeError);
}

TEST(SchmidtSpectrum, MatchesReferenceSvd) {
  const Statevector s = formula_state(4);
  const double* expected[3] = {ref::kFormula4Cut1, ref::kFormula4Cut2, ref::kFormula4Cut3};
  const double ebits[3] = {ref::kFormula4Ebits1, ref::kFormula4Ebits2, ref::kFormula4Ebits3};
  for (int cut = 1; cut <= 3; ++cut) {
    const SchmidtData d = schmidt_spectrum(s, cut);
    const int count = 1 << std::min(cut, 4 - cut);
    for (int j = 0; j < count; ++j) EXPECT_NEAR(d.singular_values[j], expected[cut - 1][j], 1e-13);
    EXPECT_NEAR(entanglement_ebits(s, cut), ebits[cut - 1], 1e-12);
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(product_state()), 1);
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(rank(ghz(n)), 2);
  EXPECT_EQ(rank(random_state(4, 1)), 4);
}

TEST(EntanglementEbits, Examples) {
  EXPECT_NEAR(entanglement_ebits(product_state(), 1), 0.0, 1e-12);
  EXPECT_NEAR(entanglement_ebits(bell(), 1), 1.0, 1e-14);
  for (int cut = 1; cut <= 3; ++cut) EXPECT_NEAR(entanglement_ebits(ghz(4), cut), 1.0, 1e-14);
}

TEST(Truncate, NoOpAtFullRank) {
  const MpsState m = statevector_to_mps(ghz(4));
  const Truncation t = truncate(m, 2);
  EXPECT_EQ(t.eps, 0.0);
  EXPECT_EQ(t.err1, 0.0);
  EXPECT_EQ(t.err2, 0.0);
  EXPECT_EQ(t.mps.bond_dims(), m.bond_dims());
  EXPECT_THROW(truncate(m, 0), ArgumentError);
}

TEST(Truncate, GhzToProduct) {
  const Truncation t = truncate(statevector_to_mps(ghz(4)), 1);
  EXPECT_NEAR(t.eps, 1 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(t.err2, 0.5, 1e-14);
  EXPECT_EQ(t.mps.max_bond(), 1);
}

TEST(Truncate, AnalyticTwoQubitFamily) {
  for (double a : {0.3, 0.1, 0.03}) {
    VectorXc v = VectorXc::Zero(4);
    v[0] = std::cos(a);
    v[3] = std::sin(a);
    const Truncation t = truncate(statevector_to_mps(Statevector(v)), 1);
    EXPECT_NEAR(t.eps, std::sin(a), 1e-14);
    EXPECT_NEAR(t.err2, std::pow(std::sin(a), 2), 1e-14);
    EXPECT_NEAR(t.err1, 2 * std::sin(a), 1e-12);
  }
}

TEST(Truncate, MatchesReferenceSweep) {
  const Truncation t = truncate(statevector_to_mps(formula_state(5)), 2);
  EXPECT_NEAR(t.err2, ref::kFormula5TruncR2Infidelity, 1e-12);
  EXPECT_LE(t.mps.max_bond(), 2);
  EXPECT_NEAR(mps_to_statevector(t.mps).norm(), 1.0, 1e-12);
}

TEST(FloatInstantiation, RoundTrip) {
  const Statevector s = random_state(4, 6);
  const BasicStatevector<float> f(s.amplitudes().cast<std::complex<float>>());
  const BasicMpsState<float> m = statevector_to_mps(f);
  const auto back = mps_to_statevector(m);
  EXPECT_NEAR(std::norm(inner_product(back, f)), 1.0f, 1e-5f);
  EXPECT_EQ(rank(f), 4);
}
