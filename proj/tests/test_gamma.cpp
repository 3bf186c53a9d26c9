#include <cmath>
#include <numbers>
#include <numeric>

#include <gtest/gtest.h>

#include "jointgamma/gamma.hpp"

using namespace jointgamma;

namespace {

constexpr double kPi = std::numbers::pi;

// frozen from mpmath
constexpr double kGammaThird = 2.678938534707747634;
constexpr double kGammaQuarter = 3.625609908221908312;
constexpr double kGammaTwoThirds = 1.354117939426400417;
constexpr double kGammaFiveSixths = 1.128787029908125961;
constexpr double kGammaThirdCubed = 19.22596945259569369;
constexpr double kGammaQuarterFourth = 172.7922660636602911;
constexpr double kGammaNegThird = -4.062353818279201251;
constexpr double kGammaNegThirdCubed = -67.03988169281114889;
constexpr double kGammaNegHalf = -3.544907701811032055;
constexpr double kBetaHalfThird = 4.206546315976362784;
constexpr double kRatio2Over17 = 1.100547405523665713;  // Gamma(2)/Gamma(1.7)

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(Gamma, FrozenRationalValues) {
  EXPECT_LE(rel(gamma_rational({1, 3}).value, kGammaThird), 1e-12);
  EXPECT_LE(rel(gamma_rational({1, 4}).value, kGammaQuarter), 1e-12);
  EXPECT_LE(rel(gamma_rational({2, 3}).value, kGammaTwoThirds), 1e-12);
  EXPECT_LE(rel(gamma_rational({5, 6}).value, kGammaFiveSixths), 1e-12);
}

TEST(Gamma, PowerForms) {
  EXPECT_LE(rel(gamma_inv_p_pow(3), kGammaThirdCubed), 1e-12);
  EXPECT_LE(rel(gamma_inv_p_pow(4), kGammaQuarterFourth), 1e-12);
  EXPECT_LE(rel(gamma_neg_inv_p_pow(3), kGammaNegThirdCubed), 1e-12);
  for (int p = 3; p <= 9; ++p)
    EXPECT_LE(rel(gamma_neg_inv_p_pow(p), std::pow(gamma_negative({1, p}), p)), 1e-11) << p;
}

TEST(Gamma, LiftsSmallDenominators) {
  const GammaValue half = gamma_rational({1, 2});
  EXPECT_EQ(half.p, 4);
  EXPECT_EQ(half.q, 2);
  EXPECT_LE(rel(half.value, std::sqrt(kPi)), 1e-12);
  const GammaValue one = gamma_rational({5, 5});
  EXPECT_EQ(one.p, 3);
  EXPECT_LE(rel(one.value, 1.0), 1e-12);
}

TEST(Gamma, ConstantMatchesClosedForm) {
  // q = 1: ln C = ln((2 pi)^{(p-1)/p} / p^{1/p})
  for (int p = 3; p <= 12; ++p) {
    const double closed = (p - 1.0) / p * std::log(2 * kPi) - std::log(double(p)) / p;
    EXPECT_NEAR(log_gamma_constant(1, p), closed, 1e-14) << p;
  }
}

TEST(Gamma, EveryReducedFractionUpToTwelve) {
  for (int p = 3; p <= 12; ++p) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(q, p) != 1) continue;
      const GammaValue g = gamma_rational({q, p});
      const double x = double(q) / p;
      EXPECT_LE(rel(g.value, ref_gamma(x)), 1e-8) << q << "/" << p;
      EXPECT_LE(rel(g.reciprocal, 1.0 / ref_gamma(x)), 1e-8) << q << "/" << p;
      EXPECT_NEAR(g.log_value, ref_log_gamma(x), 1e-9) << q << "/" << p;
      EXPECT_EQ(g.mu.size(), std::size_t(q - 1));
      EXPECT_EQ(g.v.size(), std::size_t(p - 2));
    }
  }
}

TEST(Gamma, ReflectionAndDuplication) {
  for (int p = 3; p <= 12; ++p) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(q, p) != 1) continue;
      const double x = double(q) / p;
      const double refl = gamma_rational({q, p}).value * gamma_rational({p - q, p}).value * std::sin(kPi * x) / kPi;
      EXPECT_NEAR(refl, 1.0, 1e-9) << q << "/" << p;
      EXPECT_LE(rel(gamma_duplication(x), ref_gamma(2 * x)), 1e-9) << q << "/" << p;
    }
  }
}

TEST(Gamma, NegativeArguments) {
  EXPECT_LE(rel(gamma_negative({1, 3}), kGammaNegThird), 1e-12);
  EXPECT_LE(rel(gamma_negative({1, 2}), kGammaNegHalf), 1e-12);
  // Gamma(-2x) at x = 1/4 and 1/6
  EXPECT_LE(rel(gamma_negative_doubled(0.25), kGammaNegHalf), 1e-11);
  EXPECT_LE(rel(gamma_negative_doubled(1.0 / 6.0), kGammaNegThird), 1e-11);
}

TEST(Gamma, RatioAndPositive) {
  EXPECT_LE(rel(gamma_ratio(1.7, 0.3), kRatio2Over17), 1e-11);
  EXPECT_LE(rel(gamma_positive(7.0 / 3.0), ref_gamma(7.0 / 3.0)), 1e-11);
  EXPECT_LE(rel(gamma_positive(0.123456789), ref_gamma(0.123456789)), 1e-14);
  EXPECT_EQ(gamma_ratio(2.5, 0.0), 1.0);
}

TEST(Gamma, Beta) {
  EXPECT_LE(rel(beta(0.5, 1.0 / 3.0), kBetaHalfThird), 1e-11);
  EXPECT_LE(rel(beta(0.5, 0.5), kPi), 1e-11);
  EXPECT_LE(rel(beta(2.0, 0.5), 4.0 / 3.0), 1e-11);
  EXPECT_NEAR(beta(1.0, 0.5, TruncationPolicy::fixed(3)), 2.0, 1e-15);
}

TEST(Gamma, SmallRationalDetection) {
  const auto r = as_small_rational(0.375);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->q(), 3);
  EXPECT_EQ(r->p(), 8);
  EXPECT_FALSE(as_small_rational(std::numbers::pi / 10));
  EXPECT_EQ(RationalArgument(4, 6), RationalArgument(2, 3));
}

TEST(Gamma, DomainErrors) {
  EXPECT_THROW(RationalArgument(0, 3), DomainError);
  EXPECT_THROW(gamma_rational({4, 3}), DomainError);
  EXPECT_THROW(gamma_negative({3, 2}), DomainError);
  EXPECT_THROW(gamma_negative_doubled(0.5), DomainError);
  EXPECT_THROW(gamma_inv_p_pow(2), DomainError);
  EXPECT_THROW(beta(1.0, 1.0), DomainError);
}
