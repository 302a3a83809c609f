#include "satstar/lemma.hpp"

#include <stdexcept>

#include "satstar/sparse_set.hpp"
#include "satstar/theory.hpp"

namespace satstar {

std::string to_string(KCheckMethod m) {
  switch (m) {
    case KCheckMethod::search: return "search";
    case KCheckMethod::counting_bound: return "counting-bound";
    case KCheckMethod::budget_exhausted: return "budget-exhausted";
  }
  return "unknown";
}

long long sparse_threshold(long long k, long long x0, int r, int mu) {
  return ceil_half(static_cast<long long>(r - 1) * (k - x0) + 2LL * mu);
}

std::size_t min_edges_given_independence(std::size_t k, std::size_t alpha) {
  if (alpha == 0) return k == 0 ? 0 : std::numeric_limits<std::size_t>::max();
  const std::size_t q = k / alpha, extra = k % alpha;
  auto c2 = [](std::size_t a) { return a * (a - (a > 0 ? 1 : 0)) / 2; };
  return extra * c2(q + 1) + (alpha - extra) * c2(q);
}

namespace {

bool covered_by_counting(std::size_t k, long long x0, int r, int mu, std::optional<std::size_t> alpha) {
  if (!alpha) return false;
  const long long t = sparse_threshold(static_cast<long long>(k), x0, r, mu);
  return t <= 0 || static_cast<long long>(min_edges_given_independence(k, *alpha)) >= t;
}

bool tail_covered(std::size_t from, std::size_t n, long long x0, int r, int mu, std::optional<std::size_t> alpha) {
  for (std::size_t k = from; k <= n; ++k)
    if (!covered_by_counting(k, x0, r, mu, alpha)) return false;
  return true;
}

}  // namespace

Lemma1Report check_lemma1(const Graph& g, long long x0, int r, int mu, std::optional<std::size_t> k_max,
                          const Lemma1Options& options) {
  if (x0 < 1) throw std::invalid_argument("check_lemma1: x0 must be at least 1");
  if (r < 2 || mu < 0) throw std::invalid_argument("check_lemma1: need r >= 2 and mu >= 0");
  const std::size_t n = g.order();
  Lemma1Report report;
  report.k_first = static_cast<std::size_t>(x0) + 1;
  report.k_last = report.k_first - 1;

  std::optional<std::size_t> alpha = options.independence_number;
  if (!alpha) {
    auto mis = max_sparse_set(g, 0, SparseMode::at_most);
    if (mis && mis->exact) alpha = mis->size;
  }

  const std::size_t k_hi = k_max ? std::min(*k_max, n) : n;
  for (std::size_t k = report.k_first; k <= k_hi; ++k) {
    if (!k_max && tail_covered(k, n, x0, r, mu, alpha)) break;
    KCheck step;
    step.k = k;
    step.threshold = sparse_threshold(static_cast<long long>(k), x0, r, mu);
    report.k_last = k;
    if (covered_by_counting(k, x0, r, mu, alpha)) {
      step.method = KCheckMethod::counting_bound;
      report.steps.push_back(step);
      continue;
    }
    auto res = sparse_set_decision_budgeted(g, k, static_cast<std::size_t>(step.threshold), options.budget_per_k);
    step.nodes = res.nodes;
    if (res.witness) {
      report.steps.push_back(step);
      report.ok = false;
      report.counterexample = SparseCounterexample{k, *res.witness, res.witness_edges, step.threshold};
      return report;
    }
    if (!res.complete) {
      step.method = KCheckMethod::budget_exhausted;
      report.complete = false;
    }
    report.steps.push_back(step);
  }
  report.covers_all_k =
      report.complete && (report.k_last >= n || tail_covered(report.k_last + 1, n, x0, r, mu, alpha));
  return report;
}

}  // namespace satstar
