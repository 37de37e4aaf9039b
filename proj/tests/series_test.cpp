#include <gtest/gtest.h>

#include <cmath>

#include <padebary/errors.hpp>
#include <padebary/series.hpp>

#include "support/oracles.hpp"

using namespace padebary;

TEST(FormalPowerSeries, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(FormalPowerSeries(CVector{}), InvalidArgument);
  EXPECT_THROW(FormalPowerSeries({1.0, INFINITY}), InvalidArgument);
}

TEST(FormalPowerSeries, IndexingBeyondOrder) {
  const FormalPowerSeries s{1, 2, 3};
  EXPECT_EQ(s.order(), 2);
  EXPECT_EQ(s[-1], cplx{0.0});
  EXPECT_THROW(s[3], InsufficientOrder);
  EXPECT_THROW(s.require_order(3, "test"), InsufficientOrder);
  EXPECT_NO_THROW(s.require_order(2, "test"));
}

TEST(TanOverT, LeadingCoefficientsForOmegaFour) {
  const FormalPowerSeries c = tan_over_t_series(4.0, 12);
  EXPECT_DOUBLE_EQ(c[0].real(), 1.0);
  EXPECT_NEAR(c[2].real(), 16.0 / 3.0, 1e-14);
  EXPECT_NEAR(c[4].real(), 2.0 * 256.0 / 15.0, 1e-12);
  EXPECT_NEAR(c[6].real(), 17.0 * 4096.0 / 315.0, 1e-10);
}

TEST(TanOverT, OddCoefficientsVanish) {
  const FormalPowerSeries c = tan_over_t_series(2.5, 11);
  for (int k = 1; k <= 11; k += 2) EXPECT_EQ(c[k], cplx{0.0});
}

TEST(TanOverT, MatchesTabulatedCoefficients) {
  for (const double omega : {0.5, 1.0, 4.0}) {
    const CVector expected = oracle::tan_over_t(omega, 14);
    const FormalPowerSeries c = tan_over_t_series(omega, 14);
    for (int k = 0; k <= 14; ++k) {
      EXPECT_NEAR(std::abs(c[k] - expected[k]), 0.0, 1e-13 * std::abs(expected[k]) + 1e-300)
          << "omega " << omega << " k " << k;
    }
  }
}

TEST(Log1pOverT, Coefficients) {
  const FormalPowerSeries c = log1p_over_t_series(10);
  EXPECT_EQ(c[0], cplx{1.0});
  EXPECT_EQ(c[1], cplx{-0.5});
  EXPECT_NEAR(c[2].real(), 1.0 / 3.0, 1e-16);
  EXPECT_EQ(c[3], cplx{-0.25});
  EXPECT_NEAR(c[10].real(), 1.0 / 11.0, 1e-16);
}

TEST(Geometric, Examples) {
  EXPECT_EQ(geometric_series(2.0, 3).coeffs(), (CVector{1, 2, 4, 8}));
  EXPECT_EQ(geometric_series(0.0, 2).coeffs(), (CVector{1, 0, 0}));
}

TEST(Exp, Coefficients) {
  const FormalPowerSeries c = exp_series(4);
  EXPECT_EQ(c[2], cplx{0.5});
  EXPECT_LT(oracle::max_diff(c.coeffs(), oracle::exp_coeffs(4)), 1e-16);
}

TEST(Perturb, ZeroEpsIsIdentity) {
  const FormalPowerSeries c = exp_series(6);
  EXPECT_EQ(perturb(c, 0.0, 42), c);
}

TEST(Perturb, StaysWithinEps) {
  const FormalPowerSeries c = tan_over_t_series(4.0, 8);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const FormalPowerSeries d = perturb(c, 1e-4, seed);
    for (int k = 0; k <= 8; ++k) {
      EXPECT_LE(std::abs(d[k] - c[k]), 1e-4);
      EXPECT_EQ(d[k].imag(), c[k].imag());
    }
  }
}

TEST(Perturb, DeterministicPerSeed) {
  const FormalPowerSeries c = exp_series(8);
  EXPECT_EQ(perturb(c, 1e-3, 42), perturb(c, 1e-3, 42));
  EXPECT_NE(perturb(c, 1e-3, 42), perturb(c, 1e-3, 43));
}

TEST(Perturb, NegativeEpsIsInvalid) { EXPECT_THROW(perturb(exp_series(2), -1.0, 1), InvalidArgument); }

TEST(PartialSum, Examples) {
  EXPECT_EQ(partial_sum(exp_series(5), 2), (Polynomial{1, 1, 0.5}));
  EXPECT_EQ(partial_sum(exp_series(5), -1), Polynomial{});
}

TEST(MulTruncated, Examples) {
  // Polynomials enter as series with an explicit zero tail.
  EXPECT_EQ(mul_truncated({1, 1, 0}, {1, -1, 0}, 2).coeffs(), (CVector{1, 0, -1}));
  const FormalPowerSeries c = exp_series(5);
  EXPECT_EQ(mul_truncated(c, {1, 0, 0, 0, 0, 0}, 5), c);
  EXPECT_THROW(mul_truncated({1, 1}, {1, -1}, 2), InsufficientOrder);
}

TEST(TailAndShift, AreInverse) {
  const FormalPowerSeries c{1, 2, 3, 4, 5};
  EXPECT_EQ(tail_series(c, 2).coeffs(), (CVector{3, 4, 5}));
  EXPECT_EQ(shift_up(c, 2).coeffs(), (CVector{0, 0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(tail_series(shift_up(c, 3), 3), c);
}
