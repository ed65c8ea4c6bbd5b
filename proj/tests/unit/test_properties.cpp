#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ssli/ssli.hpp"
#include "support/oracles.hpp"

namespace {

using ssli::CoefficientVector;
using ssli::PositiveVector;

constexpr int kCases = 300;

std::vector<double> positive_with_gaps(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    auto x = ssli::testing::log_uniform_vector(rng, n, 0.1, 10.0);
    auto s = x;
    std::sort(s.begin(), s.end());
    bool ok = true;
    for (std::size_t i = 1; i < n; ++i) ok &= s[i] - s[i - 1] > 1e-3 * s[i];
    if (ok) return x;
  }
}

TEST(Property, PermutationInvariance) {
  std::mt19937_64 rng(1);
  for (int c = 0; c < kCases; ++c) {
    const std::size_t n = 2 + c % 7;
    auto x = ssli::testing::log_uniform_vector(rng, n, 0.1, 10.0);
    auto p = x;
    std::shuffle(p.begin(), p.end(), rng);
    const auto ex = ssli::elementary_symmetric(x), ep = ssli::elementary_symmetric(p);
    for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(ex[k], ep[k], 1e-12 * ex[k]) << "case " << c;
    EXPECT_NEAR(ssli::f_squared_log(x), ssli::f_squared_log(p), 1e-12 * (1 + ssli::f_squared_log(x)));
  }
}

TEST(Property, ReciprocalReversesCoefficients) {
  // e_k(1/x) = e_{n-k}(x) / e_n(x) and f(1/x) = f(x).
  std::mt19937_64 rng(2);
  for (int c = 0; c < kCases; ++c) {
    const std::size_t n = 2 + c % 7;
    auto x = ssli::testing::log_uniform_vector(rng, n, 0.1, 10.0);
    std::vector<double> inv(n);
    std::transform(x.begin(), x.end(), inv.begin(), [](double v) { return 1.0 / v; });
    const auto ex = ssli::elementary_symmetric(x), ei = ssli::elementary_symmetric(inv);
    for (std::size_t k = 1; k < n; ++k) {
      const double expected = ex[n - k - 1] / ex[n - 1];
      EXPECT_NEAR(ei[k - 1], expected, 1e-12 * expected) << "case " << c;
    }
    EXPECT_NEAR(ssli::f_squared_log(inv), ssli::f_squared_log(x), 1e-12 * (1 + ssli::f_squared_log(x)));
  }
}

TEST(Property, RootMapInvertsCoefficients) {
  std::mt19937_64 rng(3);
  for (int c = 0; c < kCases; ++c) {
    const std::size_t n = 2 + c % 7;
    auto x = positive_with_gaps(rng, n);
    const auto z = ssli::phi(ssli::coefficients_of(PositiveVector(x)));
    ASSERT_TRUE(z.all_real());
    std::sort(x.begin(), x.end(), std::greater<>());
    const auto re = z.real_parts();
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(re[i], x[i], 1e-8 * x[i]) << "case " << c;
  }
}

TEST(Property, DiscriminantPositiveForDistinctRealRoots) {
  std::mt19937_64 rng(4);
  for (int c = 0; c < kCases; ++c) {
    const std::size_t n = 2 + c % 5;
    const auto e = ssli::coefficients_of(PositiveVector(positive_with_gaps(rng, n)));
    EXPECT_GT(ssli::discriminant(ssli::build_char_poly(e)), 0.0) << "case " << c;
  }
}

TEST(Property, DerivativeIsPositive) {
  std::mt19937_64 rng(5);
  for (int c = 0; c < kCases; ++c) {
    const std::size_t n = 2 + c % 7;
    const auto x = positive_with_gaps(rng, n);
    const auto z = ssli::phi(ssli::coefficients_of(PositiveVector(x)));
    for (int k = 1; k < static_cast<int>(n); ++k) {
      const double closed = ssli::df_de_closed(z, k);
      const double integral = ssli::df_de_integral(z, k);
      EXPECT_GT(integral, 0.0) << "case " << c << " k " << k;
      EXPECT_NEAR(closed, integral, 1e-6 * std::max(1.0, std::abs(integral))) << "case " << c << " k " << k;
    }
  }
}

TEST(Property, InequalityHoldsOnRandomDominatedPairs) {
  for (int c = 0; c < kCases; ++c) {
    const int n = 2 + c % 7;
    const auto pair = ssli::random_dominated_pair(n, 1000 + c, 0.5);
    const auto r = ssli::verify_ssli(pair.x, pair.y);
    EXPECT_TRUE(r.verdict.dominated) << "seed " << 1000 + c;
    EXPECT_EQ(r.status(), ssli::Status::kHolds) << "seed " << 1000 + c << " margin " << r.margin;
  }
}

TEST(Property, EntropyInequalityHoldsOnRandomPairs) {
  for (int c = 0; c < kCases; ++c) {
    const int n = 2 + c % 7;
    const auto pair = ssli::random_entropy_pair(n, 5000 + c, 0.5);
    const auto r = ssli::verify_entropy_dominance(pair.x, pair.y);
    EXPECT_TRUE(r.verdict.dominated) << "seed " << 5000 + c;
    EXPECT_EQ(r.status(), ssli::Status::kHolds) << "seed " << 5000 + c << " margin " << r.margin;
  }
}

TEST(Property, StrictSlackGivesStrictMargin) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> frac(1e-3, 0.3);
  int accepted = 0;
  for (int c = 0; c < 2000 && accepted < 100; ++c) {
    const std::size_t n = 2 + c % 5;
    const auto x = positive_with_gaps(rng, n);
    auto ey = ssli::coefficients_of(PositiveVector(x)).vector();
    for (std::size_t k = 0; k + 1 < n; ++k) ey[k] *= 1.0 + frac(rng);
    const auto z = ssli::phi(CoefficientVector(ey));
    if (!z.all_real()) continue;
    const auto re = z.real_parts();
    if (std::any_of(re.begin(), re.end(), [](double v) { return v <= 0; })) continue;
    ++accepted;
    const auto r = ssli::verify_ssli(PositiveVector(x), PositiveVector(re));
    EXPECT_TRUE(r.verdict.dominated) << "case " << c;
    EXPECT_GT(r.margin, 0.0) << "case " << c;
  }
  EXPECT_GE(accepted, 50);
}

TEST(Property, PathTracesAreMonotone) {
  for (int c = 0; c < 60; ++c) {
    const int n = 2 + c % 5;
    const auto pair = ssli::random_dominated_pair(n, 9000 + c, 0.5);
    const auto trace = ssli::trace_path(pair.x, pair.y, 21);
    EXPECT_TRUE(trace.monotone) << "seed " << 9000 + c << " drop " << trace.max_drop;
    EXPECT_NEAR(trace.samples.front().f_value, ssli::f_squared_log(pair.x.values()), 1e-8);
    EXPECT_NEAR(trace.samples.back().f_value, ssli::f_squared_log(pair.y.values()), 1e-8);
  }
}

TEST(Property, SplittingPairsGrowsFByKnownAmount) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(1, 4);
  for (int c = 0; c < kCases; ++c) {
    const int m = pick(rng);
    std::vector<double> x;
    const auto base = ssli::testing::log_uniform_vector(rng, static_cast<std::size_t>(m), 0.2, 5.0);
    for (double b : base) x.insert(x.end(), {b, b});
    const double eps = 1e-3 + 0.1 * std::uniform_real_distribution<double>()(rng);
    const PositiveVector px(x);
    const auto split = ssli::split_equal_pairs(px, eps);
    const double l = std::log1p(eps);
    EXPECT_NEAR(ssli::f_squared_log(split.values()) - ssli::f_squared_log(px.values()), 2 * m * l * l, 1e-10);
    EXPECT_TRUE(ssli::check_dominance(px, split).dominated) << "case " << c;
  }
}

TEST(Property, PfdZeroSumVanishes) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int c = 0; c < kCases; ++c) {
    const std::size_t n = 2 + c % 7;
    std::vector<ssli::Complex> z(n);
    for (auto& v : z) v = {g(rng), g(rng)};
    if (ssli::min_pairwise_gap(z) < 0.05) continue;
    for (int k = 0; k <= static_cast<int>(n) - 2; ++k) {
      EXPECT_LT(std::abs(ssli::pfd_zero_sum(z, k)), 1e-8) << "case " << c << " k " << k;
    }
  }
}

TEST(Property, MatrixVerdictMatchesEigenvalueVerdict) {
  std::mt19937_64 rng(9);
  for (int c = 0; c < 60; ++c) {
    const int n = 2 + c % 3;
    const auto pair = ssli::random_dominated_pair(n, 20000 + c, 0.5);
    const auto q1 = ssli::testing::random_rotation(rng, n), q2 = ssli::testing::random_rotation(rng, n);
    const ssli::SpdMatrix u(ssli::testing::conjugate_diagonal(q1, pair.x.vector()));
    const ssli::SpdMatrix v(ssli::testing::conjugate_diagonal(q2, pair.y.vector()));
    const auto m = ssli::verify_matrix_ssli(u, v);
    const auto s = ssli::verify_ssli(pair.x, pair.y);
    EXPECT_EQ(m.ssli.status(), s.status()) << "seed " << 20000 + c;
    EXPECT_NEAR(m.ssli.margin, s.margin, 1e-9 * (1 + std::abs(s.margin)));
  }
}

}  // namespace
