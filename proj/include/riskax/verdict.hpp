#ifndef RISKAX_VERDICT_HPP
#define RISKAX_VERDICT_HPP

#include <string_view>

namespace riskax {

/// Outcome of a randomized falsifier. NoViolationFound is not a proof.
enum class Verdict { NoViolationFound, Violated };

[[nodiscard]] constexpr std::string_view to_string(Verdict v) {
  return v == Verdict::Violated ? "violated" : "no-violation-found";
}

}  // namespace riskax

#endif  // RISKAX_VERDICT_HPP
