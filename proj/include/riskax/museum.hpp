#ifndef RISKAX_MUSEUM_HPP
#define RISKAX_MUSEUM_HPP

// Fixed textbook instances that expose the failure modes of popular metrics.
// The audit replays them before any randomized trial.

#include <utility>

#include "riskax/probability.hpp"

namespace riskax::museum {

/// Four equiprobable outcomes; Z is pointwise no larger than Z' yet
/// mean-variance with beta = 1 prefers Z'.
inline std::pair<CostRandomVariable, CostRandomVariable> table1_pair() {
  auto space = std::make_shared<const ProbabilitySpace>(ProbabilitySpace::uniform(4));
  return {CostRandomVariable(space, {1.0, 2.0, 3.0, 4.0}), CostRandomVariable(space, {2.0, 2.0, 3.0, 4.0})};
}

/// Probabilities (0.4, 0.4, 0.2); Z' trades a slightly cheaper middle outcome
/// for a 1e10 cost in the 20% tail. VaR at 0.3 prefers Z'.
inline std::pair<CostRandomVariable, CostRandomVariable> table2_pair() {
  auto space = std::make_shared<const ProbabilitySpace>(std::vector<double>{0.4, 0.4, 0.2});
  return {CostRandomVariable(space, {1.0, 2.0, 3.0}), CostRandomVariable(space, {1.0, 1.99, 1e10})};
}

/// Two equiprobable outcomes with costs 1 and 10 swapped between Z and Z'.
inline std::pair<CostRandomVariable, CostRandomVariable> swap_pair() {
  auto space = std::make_shared<const ProbabilitySpace>(std::vector<double>{0.5, 0.5});
  return {CostRandomVariable(space, {1.0, 10.0}), CostRandomVariable(space, {10.0, 1.0})};
}

}  // namespace riskax::museum

#endif  // RISKAX_MUSEUM_HPP
