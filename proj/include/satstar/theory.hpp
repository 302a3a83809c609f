#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace satstar {

/// Inputs of the two-point prediction for sat(G(n,p), K_{1,r}).
struct TheoryParams {
  std::size_t n = 0;
  double p = 0.5;
  int r = 3;
  double eps = 0.05;
  double eps_prime = 1e-3;
  double delta = 0.1;

  /// Throws std::invalid_argument unless 0 < eps' < eps < delta, 0 < p < 1, r >= 3.
  void validate() const;
};

enum class PredictionCase { one_point, two_point };

std::string to_string(PredictionCase c);

struct Prediction {
  double b = 0;          // 1 / (1 - p)
  double alpha_p = 0;
  long long x0 = 0;      // floor(alpha_p + eps)
  int r_prime = 0;
  int mu = 0;
  PredictionCase kase = PredictionCase::one_point;
  long long base_term = 0;  // ceil((r - 1)(n - x0) / 2)
  std::vector<long long> values;
  /// alpha_p + eps lies within 1e-9 of an integer, so x0 may be off by one.
  bool boundary_warning = false;
  /// log phi_{m+1}(x0) - log phi_m(x0) > ln 10 held for every 0 <= m <= r'.
  bool growth_ok = true;
};

/// ceil(a / 2) for any sign of a, in integer arithmetic.
constexpr long long ceil_half(long long a) { return a >= 0 ? (a + 1) / 2 : -((-a) / 2); }

/// Natural log of binomial(n, k) via log-gamma; n, k >= 0 and k <= n.
double log_binomial(double n, double k);

/// ln phi_m(k) where phi_m(k) = C(n,k) C(C(k,2),m) p^m (1-p)^(C(k,2)-m).
/// Returns nullopt when phi is zero (m > C(k,2)). Throws for p outside (0,1) or k > n.
std::optional<double> log_phi(std::size_t n, double p, std::size_t k, std::size_t m);

/// 2 log_b n - 2 log_b log_b n + 2 log_b(e/2) + 1 with b = 1/(1-p).
/// Throws std::domain_error when log_b n <= 1.
double alpha_p_value(std::size_t n, double p);

Prediction predict(const TheoryParams& params);

/// sat(n, K_{1,r}); throws std::invalid_argument for n <= r.
long long classic_star_sat(long long n, long long r);

/// sat(n, K_m); throws std::invalid_argument unless n >= m >= 2.
long long classic_clique_sat(long long n, long long m);

}  // namespace satstar
