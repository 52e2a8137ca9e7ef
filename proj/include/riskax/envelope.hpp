#ifndef RISKAX_ENVELOPE_HPP
#define RISKAX_ENVELOPE_HPP

// Risk envelopes: the dual, worst-case-expectation view of a coherent metric.
// For a submodular capacity the envelope is its core, whose extreme points
// are the greedy vectors of the n! outcome orderings.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "riskax/choquet.hpp"
#include "riskax/probability.hpp"

namespace riskax {

inline constexpr std::size_t kMaxEnvelopeOutcomes = 7;

using Pmf = std::vector<double>;

/// Extreme points of a compact convex set of pmfs, deduplicated and sorted
/// lexicographically.
class RiskEnvelope {
 public:
  explicit RiskEnvelope(std::vector<Pmf> vertices) {
    if (vertices.empty()) throw ValidationError("risk envelope needs at least one vertex");
    const std::size_t n = vertices.front().size();
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      const auto& q = vertices[v];
      if (q.size() != n || n == 0)
        throw ValidationError("vertices" + detail::fmt_index(v) + " has the wrong dimension");
      double total = 0.0;
      for (double x : q) {
        if (!std::isfinite(x) || x < 0.0)
          throw ValidationError("vertices" + detail::fmt_index(v) + " has a negative or non-finite entry");
        total += x;
      }
      if (std::abs(total - 1.0) > kProbabilityTolerance)
        throw ValidationError("vertices" + detail::fmt_index(v) + " does not sum to 1");
    }
    std::sort(vertices.begin(), vertices.end());
    for (auto& q : vertices) {
      const bool dup = std::any_of(vertices_.begin(), vertices_.end(), [&](const Pmf& kept) {
        for (std::size_t i = 0; i < n; ++i)
          if (std::abs(kept[i] - q[i]) > kMergeTolerance) return false;
        return true;
      });
      if (!dup) vertices_.push_back(std::move(q));
    }
  }

  [[nodiscard]] std::size_t outcomes() const noexcept { return vertices_.front().size(); }
  [[nodiscard]] const std::vector<Pmf>& vertices() const noexcept { return vertices_; }

 private:
  std::vector<Pmf> vertices_;
};

/// Core vertices of a monotone, normalized, submodular capacity: for each
/// ordering of the outcomes, q(w_(i)) = g(A_i) - g(A_{i-1}).
[[nodiscard]] inline RiskEnvelope envelope_of(const SetFunction& g) {
  const std::size_t n = g.outcomes();
  if (n > kMaxEnvelopeOutcomes)
    throw ValidationError("envelope enumeration supports at most " + std::to_string(kMaxEnvelopeOutcomes) +
                          " outcomes");
  detail::require_capacity(g);
  if (auto s = check_submodular(g); !s)
    throw ValidationError("set function is not submodular: witness A=" + std::to_string(s.witness->first) +
                          ", B=" + std::to_string(s.witness->second));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<Pmf> vertices;
  do {
    Pmf q(n, 0.0);
    Subset level = 0;
    double prev = g(0);
    for (std::size_t idx : order) {
      level |= Subset{1} << idx;
      const double cur = g(level);
      q[idx] = std::max(cur - prev, 0.0);  // monotone up to tolerance
      prev = cur;
    }
    vertices.push_back(std::move(q));
  } while (std::next_permutation(order.begin(), order.end()));
  return RiskEnvelope(std::move(vertices));
}

/// max over vertices of E_q[Z].
[[nodiscard]] inline double envelope_eval(const CostRandomVariable& z, const RiskEnvelope& env) {
  if (z.size() != env.outcomes())
    throw ValidationError("random variable has " + std::to_string(z.size()) + " outcomes but the envelope has " +
                          std::to_string(env.outcomes()));
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& q : env.vertices()) {
    double e = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) e += q[i] * z[i];
    best = std::max(best, e);
  }
  return best;
}

}  // namespace riskax

#endif  // RISKAX_ENVELOPE_HPP
