#include "satstar/theory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace satstar {

void TheoryParams::validate() const {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0, 1)");
  if (r < 3) throw std::invalid_argument("r must be at least 3");
  if (!(eps_prime > 0.0 && eps_prime < eps && eps < delta))
    throw std::invalid_argument("require 0 < eps' < eps < delta");
}

std::string to_string(PredictionCase c) { return c == PredictionCase::one_point ? "one-point" : "two-point"; }

double log_binomial(double n, double k) {
  if (k < 0 || k > n) throw std::domain_error("log_binomial: k outside [0, n]");
  return static_cast<double>(std::lgamma(static_cast<long double>(n) + 1) -
                             std::lgamma(static_cast<long double>(k) + 1) -
                             std::lgamma(static_cast<long double>(n - k) + 1));
}

std::optional<double> log_phi(std::size_t n, double p, std::size_t k, std::size_t m) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("log_phi: p must lie in (0, 1)");
  if (k > n) throw std::invalid_argument("log_phi: k exceeds n");
  const double pairs = static_cast<double>(k) * static_cast<double>(k - (k > 0 ? 1 : 0)) / 2.0;
  const auto mm = static_cast<double>(m);
  if (mm > pairs) return std::nullopt;
  return log_binomial(static_cast<double>(n), static_cast<double>(k)) + log_binomial(pairs, mm) +
         mm * std::log(p) + (pairs - mm) * std::log1p(-p);
}

double alpha_p_value(std::size_t n, double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("alpha_p_value: p must lie in (0, 1)");
  const double ln_b = -std::log1p(-p);
  const double logb_n = std::log(static_cast<double>(n)) / ln_b;
  if (!(logb_n > 1.0)) throw std::domain_error("alpha_p_value: log_b n must exceed 1");
  const double logb_logb_n = std::log(logb_n) / ln_b;
  const double logb_e_half = (1.0 - std::numbers::ln2) / ln_b;
  return 2.0 * logb_n - 2.0 * logb_logb_n + 2.0 * logb_e_half + 1.0;
}

Prediction predict(const TheoryParams& params) {
  params.validate();
  Prediction out;
  out.b = 1.0 / (1.0 - params.p);
  out.alpha_p = alpha_p_value(params.n, params.p);
  const double shifted = out.alpha_p + params.eps;
  out.x0 = static_cast<long long>(std::floor(shifted));
  out.boundary_warning = std::abs(shifted - std::round(shifted)) < 1e-9;
  if (out.x0 < 0) throw std::domain_error("predict: negative x0");

  const long long n = static_cast<long long>(params.n);
  const long long r = params.r;
  const bool both_odd = ((n - out.x0) % 2 != 0) && ((r - 1) % 2 != 0);
  out.r_prime = static_cast<int>(ceil_half(r - 3) - (both_odd ? 1 : 0));
  out.base_term = ceil_half((r - 1) * (n - out.x0));

  auto log_phi_x0 = [&](int m) -> std::optional<double> {
    if (out.x0 > n) return std::nullopt;
    return log_phi(params.n, params.p, static_cast<std::size_t>(out.x0), static_cast<std::size_t>(m));
  };
  const double log_eps_prime = std::log(params.eps_prime);
  auto at_least_eps_prime = [&](int m) {
    auto lp = log_phi_x0(m);
    return lp && *lp >= log_eps_prime;
  };

  if (!at_least_eps_prime(out.r_prime)) {
    out.kase = PredictionCase::one_point;
    out.mu = out.r_prime + 1;
    out.values = {out.base_term + out.mu};
  } else {
    out.kase = PredictionCase::two_point;
    int mu = 0;
    while (!at_least_eps_prime(mu)) ++mu;
    out.mu = mu;
    out.values = {out.base_term + mu, out.base_term + mu + 1};
  }

  const double ln10 = std::log(10.0);
  for (int m = 0; m <= out.r_prime; ++m) {
    auto lo = log_phi_x0(m), hi = log_phi_x0(m + 1);
    if (!hi) {
      out.growth_ok = false;
      continue;
    }
    if (lo && !(*hi - *lo > ln10)) out.growth_ok = false;
  }
  return out;
}

long long classic_star_sat(long long n, long long r) {
  if (r < 1 || n <= r) throw std::invalid_argument("classic_star_sat: need n >= r + 1");
  auto choose2 = [](long long a) { return a * (a - 1) / 2; };
  const long long small_branch = choose2(r) + choose2(n - r);
  // ceil(((r-1)n)/2 - r^2/8) = ceil((4(r-1)n - r^2) / 8), numerator positive here
  const long long num = 4 * (r - 1) * n - r * r;
  const long long large_branch = num >= 0 ? (num + 7) / 8 : -((-num) / 8);
  if (2 * n == 3 * r && small_branch != large_branch)
    throw std::logic_error("classic_star_sat: branches disagree at n = 3r/2");
  return 2 * n <= 3 * r ? small_branch : large_branch;
}

long long classic_clique_sat(long long n, long long m) {
  if (m < 2 || n < m) throw std::invalid_argument("classic_clique_sat: need n >= m >= 2");
  auto choose2 = [](long long a) { return a * (a - 1) / 2; };
  const long long direct = (m - 2) * (n - m + 2) + choose2(m - 2);
  const long long complement = choose2(n) - choose2(n - m + 2);
  if (direct != complement) throw std::logic_error("classic_clique_sat: identity violated");
  return direct;
}

}  // namespace satstar
