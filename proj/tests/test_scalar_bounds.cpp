#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "opmeans/random.hpp"
#include "opmeans/scalar_bounds.hpp"

using namespace opmeans;

namespace {

// Reference values below were computed with mpmath at 40 significant digits.
constexpr double kF_quarter_4 = 1.2374368670764582;
constexpr double kG_half_2 = 0.085786437626904951;
constexpr double kSpecht4 = 1.2637407212158112;
constexpr double kSpecht2 = 1.0614756908460860;
constexpr double kLogMean_1_4 = 2.1640425613334451;
constexpr double kTominaga4 = 0.50655074916563558;
constexpr double kTominaga2 = 0.086071332055934207;
constexpr double kZuo_4_quarter = 1.1180339887498948;
constexpr double kDragomir_2_half = 1.1331484530668263;

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1));
  return xs;
}

std::vector<double> unit_weights() {
  std::vector<double> vs;
  for (int k = 0; k <= 10; ++k) vs.push_back(k / 10.0);
  return vs;
}

}  // namespace

TEST(ScalarMeans, Nabla) {
  EXPECT_EQ(scalar_nabla(1, 4, 0.5), 2.5);
  EXPECT_EQ(scalar_nabla(3, 7, 0), 3.0);
  EXPECT_EQ(scalar_nabla(1, 4, 2), 7.0);
}

TEST(ScalarMeans, Sharp) {
  EXPECT_EQ(scalar_sharp(1, 4, 0.5), 2.0);
  EXPECT_EQ(scalar_sharp(3, 7, 1), 7.0);
  EXPECT_EQ(scalar_sharp(1, 4, 2), 16.0);
  EXPECT_DOUBLE_EQ(scalar_sharp(2.5, 2.5, 0.3), 2.5);
}

TEST(ScalarMeans, Harm) {
  EXPECT_DOUBLE_EQ(scalar_harm(1, 4, 0.5), 1.6);
  EXPECT_DOUBLE_EQ(scalar_harm(3, 3, 0.7), 3.0);
  EXPECT_EQ(scalar_harm(2, 2, 0.3), 2.0);
  EXPECT_THROW(scalar_harm(1, 4, 1.5), DomainError);
  EXPECT_THROW(scalar_harm(1, 4, -0.1), DomainError);
}

TEST(ScalarMeans, RejectNonPositiveArguments) {
  EXPECT_THROW(scalar_nabla(0, 1, 0.5), DomainError);
  EXPECT_THROW(scalar_sharp(1, -1, 0.5), DomainError);
  EXPECT_THROW(scalar_sharp(1, 1, std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST(ScalarMeans, ChainOnRandomTriples) {
  SplitMix64 rng(424242);
  for (int i = 0; i < 10000; ++i) {
    const double a = rng.log_uniform(1e-3, 1e3);
    const double b = rng.log_uniform(1e-3, 1e3);
    const double v = rng.uniform();
    const double h = scalar_harm(a, b, v);
    const double g = scalar_sharp(a, b, v);
    const double n = scalar_nabla(a, b, v);
    EXPECT_LE(h, g * (1 + 1e-14)) << a << ' ' << b << ' ' << v;
    EXPECT_LE(g, n * (1 + 1e-14)) << a << ' ' << b << ' ' << v;
  }
}

TEST(RatioFunctions, Examples) {
  EXPECT_EQ(f_v(1.0, 0.3), 1.0);
  EXPECT_DOUBLE_EQ(f_v(4.0, 0.5), 1.25);
  EXPECT_NEAR(f_v(4.0, 0.25), kF_quarter_4, 1e-15);
  EXPECT_EQ(g_v(1.0, 0.3), 0.0);
  EXPECT_NEAR(g_v(2.0, 0.5), kG_half_2, 1e-16);
  EXPECT_DOUBLE_EQ(g_v(3.0, 2.0), -4.0);
  EXPECT_THROW(f_v(0.0, 0.5), DomainError);
  EXPECT_THROW(g_v(-1.0, 0.5), DomainError);
}

TEST(RatioFunctions, FIsAtLeastOneOnUnitWeights) {
  for (double x : log_grid(0.01, 100, 101))
    for (double v : unit_weights()) EXPECT_GE(f_v(x, v), 1.0 - 1e-15);
}

TEST(RatioFunctions, SelfDuality) {
  for (double x : log_grid(0.01, 100, 201))
    for (double v : unit_weights())
      EXPECT_NEAR(f_v(1.0 / x, v), f_v(x, 1.0 - v), 1e-12 * f_v(x, 1.0 - v));
}

TEST(RatioFunctions, MonotoneOnEachSideOfOne) {
  for (double v : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    const auto below = log_grid(0.01, 1.0, 200);
    for (std::size_t i = 1; i < below.size(); ++i) {
      EXPECT_LE(f_v(below[i], v) - f_v(below[i - 1], v), 1e-15);
      EXPECT_LE(g_v(below[i], v) - g_v(below[i - 1], v), 1e-15);
    }
    const auto above = log_grid(1.0, 100.0, 200);
    for (std::size_t i = 1; i < above.size(); ++i) {
      EXPECT_GE(f_v(above[i], v) - f_v(above[i - 1], v), -1e-15);
      EXPECT_GE(g_v(above[i], v) - g_v(above[i - 1], v), -1e-15);
    }
  }
}

TEST(RatioFunctions, GConvexInsideUnitConcaveOutside) {
  const double step = 0.01;
  for (double x = 0.05; x < 20.0; x += 0.37) {
    for (double v : unit_weights()) {
      const double second = g_v(x + step, v) - 2 * g_v(x, v) + g_v(x - step, v);
      EXPECT_GE(second, -1e-10);
    }
    for (double v : {-0.5, 1.5, 2.0}) {
      const double second = g_v(x + step, v) - 2 * g_v(x, v) + g_v(x - step, v);
      EXPECT_LE(second, 1e-10);
    }
  }
}

TEST(RatioFunctions, GSignFlipsOutsideUnitWeights) {
  for (double x : log_grid(0.01, 100, 151)) {
    for (double v : unit_weights()) EXPECT_GE(g_v(x, v), -1e-14);
    for (double v : {-2.0, -0.5, 1.5, 2.0, 3.0}) EXPECT_LE(g_v(x, v), 1e-14 * std::max(1.0, x));
  }
}

TEST(RatioFunctions, HalfWeightMatchesKantorovichRoot) {
  for (double h : log_grid(1.001, 100, 200))
    EXPECT_NEAR(f_v(h, 0.5), std::sqrt(kantorovich(h)), 1e-14 * f_v(h, 0.5));
}

TEST(RatioFunctions, DerivativeMatchesClosedForm) {
  const double eps = 1e-5;
  for (double x : log_grid(0.05, 20, 60))
    for (double v : {0.1, 0.3, 0.5, 0.8}) {
      const double fd = (f_v(x + eps, v) - f_v(x - eps, v)) / (2 * eps);
      const double exact = v * (1 - v) * (x - 1) * std::pow(x, -v - 1);
      EXPECT_NEAR(fd, exact, 1e-6 * std::max(1.0, std::abs(exact)));
    }
}

TEST(RatioFunctions, HarmonicRatioIsInverseDualRatio) {
  // (1 !_v x)/(1 #_v x) computed straight from the means.
  for (double x : log_grid(0.05, 20, 30))
    for (double v : unit_weights())
      EXPECT_NEAR(harmonic_ratio(x, v), scalar_harm(1, x, v) / scalar_sharp(1, x, v), 1e-14);
}

TEST(Kantorovich, Examples) {
  EXPECT_EQ(kantorovich(1.0), 1.0);
  EXPECT_EQ(kantorovich(4.0), 1.5625);
  EXPECT_EQ(kantorovich(0.25), 1.5625);
  for (double h : log_grid(0.01, 100, 50)) {
    EXPECT_GE(kantorovich(h), 1.0);
    EXPECT_NEAR(kantorovich(h), kantorovich(1 / h), 1e-13 * kantorovich(h));
  }
}

TEST(Specht, Examples) {
  EXPECT_EQ(specht(1.0), 1.0);
  EXPECT_NEAR(specht(4.0), kSpecht4, 1e-15);
  EXPECT_NEAR(specht(2.0), kSpecht2, 1e-15);
  EXPECT_NEAR(specht(0.25), specht(4.0), 1e-14);
  EXPECT_THROW(specht(0.0), DomainError);
}

TEST(Specht, SymmetricAndAtLeastOne) {
  for (double t : log_grid(0.01, 100, 101)) {
    EXPECT_GE(specht(t), 1.0);
    EXPECT_NEAR(specht(t), specht(1 / t), 1e-12 * specht(t));
  }
}

TEST(Specht, ContinuousAcrossSeriesBranch) {
  for (double d : {9.99e-9, -9.99e-9})
    EXPECT_NEAR(specht(1 + d), specht(1 + d * 1.002), 1e-15);
  // S(1+d) = 1 + d^2/8 - d^3/8 + O(d^4)
  for (double d : {1e-7, 1e-6, 1e-4, -1e-4})
    EXPECT_NEAR(specht(1 + d), 1 + d * d / 8 - d * d * d / 8, 1e-14);
}

TEST(LogMean, Examples) {
  EXPECT_EQ(log_mean(3.0, 3.0), 3.0);
  EXPECT_NEAR(log_mean(1.0, 4.0), kLogMean_1_4, 1e-15);
  EXPECT_NEAR(log_mean(1.0, std::numbers::e), std::numbers::e - 1.0, 1e-15);
  EXPECT_THROW(log_mean(0.0, 1.0), DomainError);
}

TEST(LogMean, BetweenArguments) {
  SplitMix64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.log_uniform(1e-3, 1e3);
    const double y = rng.log_uniform(1e-3, 1e3);
    const double L = log_mean(x, y);
    EXPECT_GE(L, std::min(x, y) * (1 - 1e-15));
    EXPECT_LE(L, std::max(x, y) * (1 + 1e-15));
  }
}

TEST(LogMean, NotSymmetricUnderReciprocal) {
  // L(1, 1/h) = L(1, h) / h, so the two differ for h != 1.
  EXPECT_NEAR(log_mean(1.0, 0.25), log_mean(1.0, 4.0) / 4.0, 1e-15);
}

TEST(LiteratureConstants, Zuo) {
  EXPECT_EQ(zuo_constant(1.0, 0.3), 1.0);
  EXPECT_DOUBLE_EQ(zuo_constant(4.0, 0.5), 1.25);
  EXPECT_NEAR(zuo_constant(4.0, 0.25), kZuo_4_quarter, 1e-15);
  EXPECT_THROW(zuo_constant(4.0, 1.2), DomainError);
}

TEST(LiteratureConstants, SpechtForm) {
  EXPECT_EQ(specht_constant(1.0, 0.4), 1.0);
  EXPECT_NEAR(specht_constant(4.0, 0.5), kSpecht2, 1e-15);
  EXPECT_EQ(specht_constant(4.0, 0.0), 1.0);
}

TEST(LiteratureConstants, Dragomir) {
  EXPECT_EQ(dragomir_constant(1.0, 0.3), 1.0);
  EXPECT_EQ(dragomir_constant(5.0, 0.0), 1.0);
  EXPECT_EQ(dragomir_constant(5.0, 1.0), 1.0);
  EXPECT_NEAR(dragomir_constant(2.0, 0.5), kDragomir_2_half, 1e-15);
}

TEST(LiteratureConstants, Tominaga) {
  EXPECT_EQ(tominaga_additive(1.0), 0.0);
  EXPECT_NEAR(tominaga_additive(4.0), kTominaga4, 1e-15);
  EXPECT_NEAR(tominaga_additive(2.0), kTominaga2, 1e-15);
  for (double h : log_grid(0.01, 100, 40)) EXPECT_GE(tominaga_additive(h), 0.0);
}

TEST(WeightType, UnitAndRatio) {
  EXPECT_TRUE(Weight(0.0).in_unit());
  EXPECT_TRUE(Weight(1.0).in_unit());
  EXPECT_FALSE(Weight(1.5).in_unit());
  EXPECT_EQ(Weight(0.3).r(), 0.3);
  EXPECT_EQ(Weight(0.75).r(), 0.25);
  EXPECT_THROW(Weight(2.0).r(), DomainError);
  EXPECT_THROW(Weight(std::numeric_limits<double>::infinity()), DomainError);
}
