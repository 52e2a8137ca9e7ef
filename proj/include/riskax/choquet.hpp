#ifndef RISKAX_CHOQUET_HPP
#define RISKAX_CHOQUET_HPP

// Set functions (capacities) over the subsets of a finite outcome space and
// Choquet integration against them. Subsets are n-bit masks: bit i set means
// outcome i is in the set.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "riskax/probability.hpp"
#include "riskax/static_metrics.hpp"

namespace riskax {

using Subset = std::uint32_t;

inline constexpr std::size_t kMaxSetFunctionOutcomes = 20;
inline constexpr std::size_t kMaxSubmodularCheckOutcomes = 12;
inline constexpr double kSetFunctionTolerance = 1e-12;

/// Table of g(A) for every A in 2^Omega. Only the shape is validated here;
/// capacity properties are checked by check_monotone / check_normalized /
/// check_submodular and enforced by the operations that need them.
class SetFunction {
 public:
  SetFunction(std::size_t n, std::vector<double> table) : n_(n), table_(std::move(table)) {
    if (n_ == 0 || n_ > kMaxSetFunctionOutcomes)
      throw ValidationError("set function needs 1 <= n <= " + std::to_string(kMaxSetFunctionOutcomes));
    if (table_.size() != (std::size_t{1} << n_))
      throw ValidationError("set function table has " + std::to_string(table_.size()) + " entries, expected 2^" +
                            std::to_string(n_) + " = " + std::to_string(std::size_t{1} << n_));
    for (std::size_t i = 0; i < table_.size(); ++i)
      if (!std::isfinite(table_[i])) throw ValidationError("table" + detail::fmt_index(i) + " must be finite");
  }

  /// Build from a rule g(A) evaluated on every mask.
  template <class F>
  static SetFunction from(std::size_t n, F&& rule) {
    if (n == 0 || n > kMaxSetFunctionOutcomes)
      throw ValidationError("set function needs 1 <= n <= " + std::to_string(kMaxSetFunctionOutcomes));
    std::vector<double> t(std::size_t{1} << n);
    for (std::size_t a = 0; a < t.size(); ++a) t[a] = rule(static_cast<Subset>(a));
    return SetFunction(n, std::move(t));
  }

  [[nodiscard]] std::size_t outcomes() const noexcept { return n_; }
  [[nodiscard]] Subset full() const noexcept { return static_cast<Subset>((std::size_t{1} << n_) - 1); }
  [[nodiscard]] double operator()(Subset a) const { return table_[a]; }
  [[nodiscard]] std::span<const double> table() const noexcept { return table_; }

  friend bool operator==(const SetFunction&, const SetFunction&) = default;

 private:
  std::size_t n_;
  std::vector<double> table_;
};

/// Result of a capacity property check; carries a witnessing pair on failure
/// (for monotonicity A is a subset of B with g(A) > g(B)).
struct SetCheck {
  bool holds = true;
  std::optional<std::pair<Subset, Subset>> witness;

  explicit operator bool() const noexcept { return holds; }
};

/// P(A) for every subset, accumulated along the lowest set bit.
[[nodiscard]] inline std::vector<double> subset_masses(const ProbabilitySpace& space) {
  if (space.size() > kMaxSetFunctionOutcomes)
    throw ValidationError("subset enumeration supports at most " + std::to_string(kMaxSetFunctionOutcomes) +
                          " outcomes");
  std::vector<double> mass(std::size_t{1} << space.size(), 0.0);
  for (std::size_t a = 1; a < mass.size(); ++a) {
    const auto low = static_cast<std::size_t>(std::countr_zero(a));
    mass[a] = mass[a & (a - 1)] + space[low];
  }
  return mass;
}

/// g(A) = P(A).
[[nodiscard]] inline SetFunction probability_capacity(const ProbabilitySpace& space) {
  auto mass = subset_masses(space);
  mass.back() = 1.0;
  return SetFunction(space.size(), std::move(mass));
}

[[nodiscard]] inline SetCheck check_normalized(const SetFunction& g) {
  if (std::abs(g(0)) > kSetFunctionTolerance) return {false, std::pair{Subset{0}, Subset{0}}};
  if (std::abs(g(g.full()) - 1.0) > kSetFunctionTolerance) return {false, std::pair{g.full(), g.full()}};
  return {};
}

/// Single-element extensions suffice: A subset B is a chain of them.
[[nodiscard]] inline SetCheck check_monotone(const SetFunction& g) {
  const std::size_t n = g.outcomes();
  for (Subset a = 0; a <= g.full(); ++a) {
    for (std::size_t i = 0; i < n; ++i) {
      const Subset bit = Subset{1} << i;
      if (a & bit) continue;
      if (g(a) > g(a | bit) + kSetFunctionTolerance) return {false, std::pair{a, Subset(a | bit)}};
    }
    if (a == g.full()) break;
  }
  return {};
}

/// Exhaustive g(A u B) + g(A n B) <= g(A) + g(B) over all pairs; O(4^n).
[[nodiscard]] inline SetCheck check_submodular(const SetFunction& g) {
  if (g.outcomes() > kMaxSubmodularCheckOutcomes)
    throw ValidationError("submodularity check supports at most " + std::to_string(kMaxSubmodularCheckOutcomes) +
                          " outcomes");
  const Subset full = g.full();
  for (Subset a = 0;; ++a) {
    for (Subset b = a + 1; b <= full; ++b) {
      if (g(a | b) + g(a & b) > g(a) + g(b) + kSetFunctionTolerance) return {false, std::pair{a, b}};
    }
    if (a == full) break;
  }
  return {};
}

namespace detail {

inline void require_capacity(const SetFunction& g) {
  if (!check_normalized(g)) throw ValidationError("set function is not normalized (g(empty)=0, g(Omega)=1)");
  if (auto m = check_monotone(g); !m)
    throw ValidationError("set function is not monotone: g(" + std::to_string(m.witness->first) + ") > g(" +
                          std::to_string(m.witness->second) + ")");
}

// Outcome indices by descending value; ties by ascending index.
inline std::vector<std::size_t> descending_order(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  return order;
}

}  // namespace detail

/// Choquet integral as the telescoping sum over the upper level sets
/// A_i = {top-i outcomes}: sum_i Z_(i) (g(A_i) - g(A_{i-1})).
[[nodiscard]] inline double choquet_integral(const CostRandomVariable& z, const SetFunction& g) {
  if (z.size() != g.outcomes())
    throw ValidationError("random variable has " + std::to_string(z.size()) + " outcomes but the set function has " +
                          std::to_string(g.outcomes()));
  detail::require_capacity(g);
  const auto order = detail::descending_order(z.values());
  double acc = 0.0;
  Subset level = 0;
  double prev = g(0);
  for (std::size_t idx : order) {
    level |= Subset{1} << idx;
    const double cur = g(level);
    acc += z[idx] * (cur - prev);
    prev = cur;
  }
  return acc;
}

/// g(A) = Psi(P(A)) with Psi the distortion induced by nu. The Choquet
/// integral against this capacity reproduces distortion_mixture(., nu).
[[nodiscard]] inline SetFunction distortion_set_function(const SpectralMeasure& nu, const ProbabilitySpace& space) {
  const auto mass = subset_masses(space);
  std::vector<double> table(mass.size());
  for (std::size_t a = 0; a < mass.size(); ++a) table[a] = std::clamp(nu.distort(mass[a]), 0.0, 1.0);
  table.front() = 0.0;
  table.back() = 1.0;
  return SetFunction(space.size(), std::move(table));
}

}  // namespace riskax

#endif  // RISKAX_CHOQUET_HPP
