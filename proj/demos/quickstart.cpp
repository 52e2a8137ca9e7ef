// Evaluates a few metrics on one cost distribution, cross-checks CVaR through
// its Choquet and envelope forms, and audits VaR for subadditivity.

#include <iostream>

#include "riskax/riskax.hpp"

int main() {
  using namespace riskax;

  const CostRandomVariable z({0.4, 0.4, 0.2}, {1.0, 2.0, 3.0});
  std::cout << "E[Z]        = " << expectation(z) << "\n"
            << "VaR_0.3(Z)  = " << value_at_risk(z, 0.3) << "\n"
            << "CVaR_0.3(Z) = " << cvar(z, 0.3) << "\n";

  const auto g = distortion_set_function(SpectralMeasure::point(0.3), z.space());
  std::cout << "Choquet     = " << choquet_integral(z, g) << "\n"
            << "envelope    = " << envelope_eval(z, envelope_of(g)) << "\n";

  const auto verdict = audit_subadditivity(metric_under_test(MetricSpec::var(0.3)), 1000, 0);
  std::cout << "VaR_0.3 subadditivity: " << to_string(verdict.verdict) << "\n";
  if (verdict.counterexample) {
    const auto& c = *verdict.counterexample;
    std::cout << "  rho(Z + Z') = " << c.check.lhs << " > rho(Z) + rho(Z') = " << c.check.rhs << "\n";
  }
}
