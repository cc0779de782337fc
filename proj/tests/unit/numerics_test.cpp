#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "curvegen/error.hpp"
#include "curvegen/numerics.hpp"
#include "helpers.hpp"

namespace curvegen {
namespace {

TEST(Rational, NormalizesSignAndGcd) {
  const Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(0, -7), Rational(0));
  EXPECT_EQ(Rational(0, -7).den(), 1);
}

TEST(Rational, ZeroDenominatorThrows) { EXPECT_THROW(Rational(1, 0), std::domain_error); }

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_EQ(-Rational(2, 3), Rational(-2, 3));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, FloorRoundsDown) {
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-4, 2).floor(), -2);
}

TEST(Rational, OrderingMatchesCrossMultiplication) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> den(1, 1000);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const Rational x(a, b), y(c, d);
    EXPECT_EQ(x < y, a * d < c * b);
    EXPECT_EQ(x == y, a * d == c * b);
  }
}

TEST(Rational, OrderingNearLimits) {
  constexpr auto big = std::numeric_limits<std::int64_t>::max();
  EXPECT_LT(Rational(big - 1, big), Rational(1));
  EXPECT_GT(Rational(big, big - 1), Rational(1));
}

TEST(Rational, OverflowIsReported) {
  constexpr auto big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(Rational(big) + Rational(1), std::overflow_error);
  EXPECT_THROW(Rational(big, 2) * Rational(big, 3), std::overflow_error);
  EXPECT_THROW(checked::mul(big, 2), std::overflow_error);
  EXPECT_EQ(checked::add(big - 1, 1), big);
}

TEST(Slope, Examples) {
  EXPECT_EQ(slope(ChernPair(2, 3)), ExtendedSlope(Rational(3, 2)));
  EXPECT_EQ(slope(ChernPair(1, 0)), ExtendedSlope(Rational(0)));
  EXPECT_TRUE(slope(ChernPair(0, 5)).is_infinite());
  EXPECT_EQ(slope(ChernPair(0, 5)).to_string(), "inf");
}

TEST(ExtendedSlope, InfinityIsTop) {
  EXPECT_GT(ExtendedSlope::infinity(), ExtendedSlope(Rational(1'000'000)));
  EXPECT_EQ(ExtendedSlope::infinity(), ExtendedSlope::infinity());
  EXPECT_THROW((void)ExtendedSlope::infinity().value(), std::logic_error);
}

TEST(ChernPair, RejectsDegenerateClasses) {
  try {
    ChernPair(0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroSheaf);
  }
  EXPECT_THROW(ChernPair(-1, 2), Error);
  EXPECT_THROW(ChernPair(0, -3), Error);
  EXPECT_NO_THROW(ChernPair(2, -3));
}

TEST(ChernPair, AdditionAndScaling) {
  EXPECT_EQ(ChernPair(1, 2) + ChernPair(2, -1), ChernPair(3, 1));
  EXPECT_EQ(ChernPair(2, 3).scaled(3), ChernPair(6, 9));
  EXPECT_EQ(ChernPair::torsion(4).length(), 4);
  EXPECT_EQ(ChernPair(2, 4).length(), 0);
}

TEST(Curve, RejectsNegativeGenus) {
  EXPECT_THROW(Curve(-1), Error);
  EXPECT_EQ(Curve(3).canonical_degree(), 4);
}

TEST(EulerPairing, Examples) {
  EXPECT_EQ(euler_pairing(ChernPair(1, 0), ChernPair(1, 1), Curve(2)), 0);
  EXPECT_EQ(euler_pairing(ChernPair(1, 0), ChernPair(1, 0), Curve(1)), 0);
  EXPECT_EQ(euler_pairing(ChernPair(1, 0), ChernPair(1, 2), Curve(0)), 3);
}

TEST(EulerPairing, TorsionExtension) {
  const Curve c(4);
  EXPECT_EQ(euler_pairing(ChernPair(3, 1), ChernPair::torsion(2), c), 6);
  EXPECT_EQ(euler_pairing(ChernPair::torsion(2), ChernPair(3, 1), c), -6);
  EXPECT_EQ(euler_pairing(ChernPair::torsion(2), ChernPair::torsion(5), c), 0);
}

TEST(EulerPairing, MatchesIntegerOracle) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> rank(0, 8), deg(-50, 50), genus(0, 10);
  for (int i = 0; i < 5000; ++i) {
    const std::int64_t r1 = rank(rng), r2 = rank(rng);
    const std::int64_t d1 = r1 == 0 ? 1 + std::abs(deg(rng)) : deg(rng);
    const std::int64_t d2 = r2 == 0 ? 1 + std::abs(deg(rng)) : deg(rng);
    const ChernPair e(r1, d1), f(r2, d2);
    const std::int64_t g = genus(rng);
    ASSERT_EQ(euler_pairing(e, f, Curve(g)), test::chi_oracle(e, f, g)) << e << " " << f << " g=" << g;
  }
}

TEST(EulerPairing, SelfPairingOfLineBundleIsOneMinusGenus) {
  for (std::int64_t g = 0; g <= 10; ++g) {
    for (std::int64_t d = -5; d <= 5; ++d) EXPECT_EQ(euler_pairing(ChernPair(1, d), ChernPair(1, d), Curve(g)), 1 - g);
  }
}

TEST(SerreTwist, Examples) {
  EXPECT_EQ(serre_twist(ChernPair(1, 0), Curve(2)), ChernPair(1, 2));
  EXPECT_EQ(serre_twist(ChernPair(2, 1), Curve(3)), ChernPair(2, 9));
  EXPECT_EQ(serre_twist(ChernPair(0, 3), Curve(2)), ChernPair(0, 3));
}

TEST(SerreTwist, AntisymmetryIncludingTorsion) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::int64_t> rank(0, 8), deg(-50, 50), genus(0, 10);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t r1 = rank(rng), r2 = rank(rng);
    const ChernPair e(r1, r1 == 0 ? 3 : deg(rng)), f(r2, r2 == 0 ? 2 : deg(rng));
    const Curve c(genus(rng));
    ASSERT_EQ(euler_pairing(e, f, c), -euler_pairing(f, serre_twist(e, c), c));
  }
}

}  // namespace
}  // namespace curvegen
