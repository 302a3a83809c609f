#include <gtest/gtest.h>

#include <cmath>

#include "phi_oracle.hpp"
#include "satstar/theory.hpp"

using namespace satstar;

TEST(CeilHalf, IntegerArithmetic) {
  EXPECT_EQ(ceil_half(0), 0);
  EXPECT_EQ(ceil_half(3), 2);
  EXPECT_EQ(ceil_half(4), 2);
  EXPECT_EQ(ceil_half(-3), -1);
  EXPECT_EQ(ceil_half(-4), -2);
}

TEST(LogPhi, Examples) {
  EXPECT_NEAR(*log_phi(10, 0.5, 3, 0), std::log(15.0), 1e-12);
  EXPECT_NEAR(*log_phi(10, 0.5, 3, 3), std::log(15.0), 1e-12);
  EXPECT_FALSE(log_phi(10, 0.5, 3, 4).has_value());
  EXPECT_NEAR(*log_phi(5, 0.3, 0, 0), 0.0, 1e-15);
  EXPECT_THROW(log_phi(5, 0.0, 2, 0), std::invalid_argument);
  EXPECT_THROW(log_phi(5, 0.5, 6, 0), std::invalid_argument);
}

TEST(LogPhi, MatchesExactRationalEverywhereUpToTwenty) {
  const std::pair<unsigned, unsigned> probabilities[] = {{1, 2}, {3, 10}, {7, 10}};
  double worst = 0;
  for (auto [num, den] : probabilities) {
    const double p = static_cast<double>(num) / den;
    for (unsigned n = 0; n <= 20; ++n)
      for (unsigned k = 0; k <= n; ++k)
        for (unsigned m = 0; m <= k * (k - (k > 0 ? 1 : 0)) / 2; ++m) {
          const double exact = satstar::testing::exact_phi(n, num, den, k, m).convert_to<double>();
          const auto lp = log_phi(n, p, k, m);
          ASSERT_TRUE(lp.has_value());
          const double rel = std::abs(std::exp(*lp) - exact) / exact;
          worst = std::max(worst, rel);
          ASSERT_LE(rel, 1e-10) << "n=" << n << " p=" << p << " k=" << k << " m=" << m;
        }
  }
  RecordProperty("worst_relative_error", std::to_string(worst));
}

TEST(AlphaP, ClosedFormValues) {
  EXPECT_NEAR(alpha_p_value(1024, 0.5), 20 - 2 * std::log2(10.0) + 2 * (std::log2(std::exp(1.0)) - 1) + 1, 1e-12);
  EXPECT_NEAR(alpha_p_value(1024, 0.5), 15.2415, 1e-4);
  EXPECT_NEAR(alpha_p_value(1 << 16, 0.5), 25.885, 1e-3);
  EXPECT_THROW(alpha_p_value(2, 0.5), std::domain_error);
  EXPECT_THROW(alpha_p_value(100, 1.0), std::invalid_argument);
}

TEST(AlphaP, MonotoneFromOneHundred) {
  for (std::size_t n = 100; n < 5000; ++n) ASSERT_GT(alpha_p_value(n + 1, 0.5), alpha_p_value(n, 0.5)) << n;
}

TEST(Predict, RThreeHasEmptyParityCorrection) {
  for (std::size_t n : {100, 101, 500, 1001}) {
    TheoryParams params;
    params.n = n;
    params.r = 3;
    const auto pred = predict(params);
    EXPECT_EQ(pred.r_prime, 0);
    if (pred.kase == PredictionCase::one_point) EXPECT_EQ(pred.mu, 1);
  }
}

TEST(Predict, RFourParity) {
  for (std::size_t n = 200; n < 220; ++n) {
    TheoryParams params;
    params.n = n;
    params.r = 4;
    const auto pred = predict(params);
    const bool odd = (static_cast<long long>(n) - pred.x0) % 2 != 0;
    EXPECT_EQ(pred.r_prime, odd ? 0 : 1) << n;
  }
}

TEST(Predict, InvariantsHold) {
  for (int r = 3; r <= 8; ++r)
    for (std::size_t n : {50, 200, 1000, 100000}) {
      TheoryParams params;
      params.n = n;
      params.r = r;
      params.p = 0.4;
      const auto pred = predict(params);
      EXPECT_EQ(pred.x0, static_cast<long long>(std::floor(pred.alpha_p + params.eps)));
      EXPECT_EQ(pred.base_term, ceil_half((r - 1) * (static_cast<long long>(n) - pred.x0)));
      EXPECT_GE(pred.r_prime, 0);
      if (pred.kase == PredictionCase::one_point) {
        EXPECT_EQ(pred.mu, pred.r_prime + 1);
        EXPECT_EQ(pred.values, (std::vector<long long>{pred.base_term + pred.mu}));
      } else {
        EXPECT_LE(pred.mu, pred.r_prime);
        EXPECT_EQ(pred.values, (std::vector<long long>{pred.base_term + pred.mu, pred.base_term + pred.mu + 1}));
        EXPECT_GE(*log_phi(n, 0.4, static_cast<std::size_t>(pred.x0), static_cast<std::size_t>(pred.mu)),
                  std::log(params.eps_prime));
      }
    }
}

TEST(Predict, FrozenRegressionMillion) {
  TheoryParams params;
  params.n = 1000000;
  params.p = 0.5;
  params.r = 5;
  const auto pred = predict(params);
  EXPECT_DOUBLE_EQ(pred.b, 2.0);
  EXPECT_NEAR(pred.alpha_p, 33.11456052769472, 1e-9);
  EXPECT_EQ(pred.x0, 33);
  EXPECT_EQ(pred.r_prime, 1);
  EXPECT_EQ(pred.mu, 0);
  EXPECT_EQ(pred.kase, PredictionCase::two_point);
  EXPECT_EQ(pred.base_term, 1999934);
  EXPECT_EQ(pred.values, (std::vector<long long>{1999934, 1999935}));
  EXPECT_FALSE(pred.boundary_warning);
  EXPECT_TRUE(pred.growth_ok);
}

TEST(Predict, RejectsBadParameters) {
  TheoryParams params;
  params.n = 100;
  params.r = 2;
  EXPECT_THROW(predict(params), std::invalid_argument);
  params.r = 3;
  params.eps_prime = 0.2;
  EXPECT_THROW(predict(params), std::invalid_argument);
  params.eps_prime = 1e-3;
  params.p = 1.0;
  EXPECT_THROW(predict(params), std::invalid_argument);
}

TEST(Predict, BoundaryWarningNearInteger) {
  TheoryParams params;
  params.n = 1024;
  params.r = 3;
  params.eps = 16.0 - alpha_p_value(1024, 0.5);
  params.delta = 1.0;
  EXPECT_TRUE(predict(params).boundary_warning);
}

TEST(ClassicStarSat, Examples) {
  EXPECT_EQ(classic_star_sat(5, 4), 6);
  EXPECT_EQ(classic_star_sat(10, 3), 9);
  EXPECT_EQ(classic_star_sat(6, 4), 7);
  EXPECT_THROW(classic_star_sat(4, 4), std::invalid_argument);
}

TEST(ClassicCliqueSat, Examples) {
  EXPECT_EQ(classic_clique_sat(5, 3), 4);
  for (int n = 2; n < 20; ++n) EXPECT_EQ(classic_clique_sat(n, 2), 0);
  EXPECT_EQ(classic_clique_sat(6, 4), 9);
  EXPECT_THROW(classic_clique_sat(3, 4), std::invalid_argument);
}
