#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "jointgamma/identities.hpp"
#include "jointgamma/reference.hpp"

using namespace jointgamma;

namespace {
constexpr double kGammaQuarterSquared = 13.14504720659687441;
}

TEST(Identities, ClosedFormsOnGrids) {
  for (int i = 1; i <= 50; ++i) {
    const double x = i / 51.0;
    EXPECT_LE(check_identity(IdentityName::sin, x).rel_residual, 1e-6) << x;
    EXPECT_LE(check_identity(IdentityName::pow2, x).rel_residual, 1e-6) << x;
    EXPECT_LE(check_identity(IdentityName::tan, 0.5 * x).rel_residual, 1e-6) << x;
  }
}

TEST(Identities, RawSinProductIsSlow) {
  // frozen raw partial at m = 20000, x = 1/6
  EXPECT_NEAR(sin_product(1.0 / 6.0, TruncationPolicy::fixed(20000)), 0.50000277778549, 1e-13);
}

TEST(Identities, TanAtQuarterIsExact) {
  const IdentityCheck c = check_identity(IdentityName::tan, 0.25, TruncationPolicy::fixed(100));
  EXPECT_EQ(c.lhs, 1.0);
  EXPECT_EQ(c.rel_residual, 0.0);
}

TEST(Identities, Pow2AtHalf) {
  // b = 1/2: 2^0 / sin(pi/2) = 1 and every factor is 1
  EXPECT_EQ(pow2_product(0.5, TruncationPolicy::fixed(10)), 1.0);
}

TEST(Identities, QuarterFrozenPartials) {
  const QuarterProducts one = gamma_quarter_squared(1);
  EXPECT_NEAR(one.classical, 13.059355422486368, 1e-13);
  EXPECT_NEAR(one.modern, 11.812207459291815, 1e-13);
  const QuarterProducts ten = gamma_quarter_squared(10);
  EXPECT_NEAR(ten.classical, 13.143187006217777, 1e-12);
  EXPECT_NEAR(ten.modern, 12.983849634420749, 1e-12);
}

TEST(Identities, QuarterConvergesAndClassicalStaysAhead) {
  EXPECT_NEAR(std::exp(2 * ref_log_gamma(0.25)), kGammaQuarterSquared, 1e-12);
  for (long m = 1; m <= 1000; ++m) {
    const QuarterProducts q = gamma_quarter_squared(m);
    EXPECT_LT(std::abs(q.classical - kGammaQuarterSquared), std::abs(q.modern - kGammaQuarterSquared)) << m;
  }
  const QuarterProducts big = gamma_quarter_squared(1'000'000);
  EXPECT_NEAR(big.classical, kGammaQuarterSquared, 1e-9);
  EXPECT_NEAR(big.modern, kGammaQuarterSquared, 1e-4);
  // tail-corrected modern product
  const double modern = quarter_modern_prefactor() *
                        evaluate_product(quarter_modern_factors(), TruncationPolicy::tail_corrected(1000)).value;
  EXPECT_NEAR(modern, kGammaQuarterSquared, 1e-10);
}

TEST(Identities, DomainErrors) {
  EXPECT_THROW(sin_product(1.0), DomainError);
  EXPECT_THROW(tan_product(0.5), DomainError);
  EXPECT_THROW(pow2_product(0.0), DomainError);
  EXPECT_THROW(check_identity(IdentityName::quarter, 0.0), DomainError);
  EXPECT_THROW(gamma_quarter_squared(0), DomainError);
}
