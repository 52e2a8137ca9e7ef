#ifndef RISKAX_TESTS_GENERATORS_HPP
#define RISKAX_TESTS_GENERATORS_HPP

// Hand-rolled generators for property tests.

#include <algorithm>
#include <vector>

#include "riskax/choquet.hpp"
#include "riskax/sampling.hpp"

namespace riskax::gen {

inline CostRandomVariable random_variable(Sampler& s, std::size_t n, bool lattice = false) {
  return CostRandomVariable(s.space(n), s.costs(n, lattice));
}

/// Costs in [-10, 10] without heavy outliers; for relative-error checks.
inline CostRandomVariable moderate_variable(Sampler& s, std::size_t n) {
  std::vector<double> v(n);
  const bool lattice = s.chance(0.25);
  for (double& x : v) x = lattice ? static_cast<double>(s.index(0, 6)) - 3.0 : s.uniform(-10.0, 10.0);
  return CostRandomVariable(s.space(n), std::move(v));
}

/// Monotone, normalized, submodular capacity on n outcomes: a convex
/// combination of concave distortions of random probability measures and
/// coverage functions. Not law invariant in general.
inline SetFunction random_submodular(Sampler& s, std::size_t n) {
  const std::size_t terms = s.index(1, 3);
  std::vector<double> weights(terms);
  double total = 0.0;
  for (double& w : weights) total += (w = s.uniform(0.1, 1.0));
  std::vector<double> table(std::size_t{1} << n, 0.0);
  for (std::size_t k = 0; k < terms; ++k) {
    const double w = weights[k] / total;
    if (s.chance(0.3)) {
      // Coverage: 1 if A meets a fixed nonempty set S.
      Subset cover = 0;
      while (cover == 0)
        for (std::size_t i = 0; i < n; ++i)
          if (s.chance(0.4)) cover |= Subset{1} << i;
      for (std::size_t a = 1; a < table.size(); ++a) table[a] += (a & cover) ? w : 0.0;
    } else {
      const ProbabilitySpace p(s.pmf(n));
      const auto mass = subset_masses(p);
      const double level = s.uniform(0.05, 1.0);
      for (std::size_t a = 1; a < table.size(); ++a) table[a] += w * std::min(mass[a] / level, 1.0);
    }
  }
  table.front() = 0.0;
  table.back() = 1.0;
  for (double& x : table) x = std::clamp(x, 0.0, 1.0);
  return SetFunction(n, std::move(table));
}

}  // namespace riskax::gen

#endif  // RISKAX_TESTS_GENERATORS_HPP
