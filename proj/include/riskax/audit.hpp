#ifndef RISKAX_AUDIT_HPP
#define RISKAX_AUDIT_HPP

// Randomized, seeded falsification of the risk-metric axioms
//   A1 monotonicity, A2 translation invariance, A3 positive homogeneity,
//   A4 subadditivity, A5 comonotone additivity, A6 law invariance
// for any black-box metric. A verdict of "no violation found" is the absence
// of a counterexample in the trials run, not a proof.

#include <algorithm>
#include <array>
#include <bitset>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "riskax/museum.hpp"
#include "riskax/probability.hpp"
#include "riskax/sampling.hpp"
#include "riskax/static_metrics.hpp"
#include "riskax/verdict.hpp"

namespace riskax {

enum class Property : int {
  Monotonicity = 0,
  TranslationInvariance,
  PositiveHomogeneity,
  Subadditivity,
  ComonotoneAdditivity,
  LawInvariance,
  Convexity,  // implied by A3 + A4; audited separately
};

inline constexpr std::array<Property, 6> kAxioms = {
    Property::Monotonicity,  Property::TranslationInvariance, Property::PositiveHomogeneity,
    Property::Subadditivity, Property::ComonotoneAdditivity,  Property::LawInvariance,
};

inline constexpr double kAuditTolerance = 1e-7;
inline constexpr std::size_t kDefaultAuditTrials = 10000;

[[nodiscard]] constexpr std::string_view label(Property p) {
  constexpr std::array<std::string_view, 7> labels = {"A1", "A2", "A3", "A4", "A5", "A6", "convexity"};
  return labels[static_cast<std::size_t>(p)];
}

[[nodiscard]] constexpr std::string_view describe(Property p) {
  constexpr std::array<std::string_view, 7> names = {
      "monotonicity",          "translation invariance", "positive homogeneity", "subadditivity",
      "comonotone additivity", "law invariance",         "convexity",
  };
  return names[static_cast<std::size_t>(p)];
}

/// Subset of {A1..A6}; bit i is axiom A(i+1).
using AxiomSet = std::bitset<6>;

[[nodiscard]] inline AxiomSet axiom_set(std::initializer_list<Property> ps) {
  AxiomSet s;
  for (Property p : ps) s.set(static_cast<std::size_t>(p));
  return s;
}

[[nodiscard]] inline AxiomSet all_axioms() { return AxiomSet{}.set(); }

/// "A1 – A4, A6" style, collapsing runs of three or more.
[[nodiscard]] inline std::string format_axioms(const AxiomSet& s) {
  if (s.none()) return "none";
  std::string out;
  std::size_t i = 0;
  while (i < 6) {
    if (!s.test(i)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < 6 && s.test(j + 1)) ++j;
    if (!out.empty()) out += ", ";
    if (j - i >= 2)
      out += "A" + std::to_string(i + 1) + " – A" + std::to_string(j + 1);
    else
      for (std::size_t k = i; k <= j; ++k) out += (k == i ? "" : ", ") + ("A" + std::to_string(k + 1));
    i = j + 1;
  }
  return out;
}

/// Axioms each metric family is known to satisfy, as tabulated in the
/// standard literature. CVaR mixtures are distortion metrics.
[[nodiscard]] inline AxiomSet reference_axioms(const MetricSpec& spec) {
  using P = Property;
  return std::visit(detail::overloaded{
                        [](const metric::ValueAtRisk&) {
                          return axiom_set({P::Monotonicity, P::TranslationInvariance, P::PositiveHomogeneity,
                                            P::ComonotoneAdditivity, P::LawInvariance});
                        },
                        [](const metric::MeanVariance&) { return axiom_set({P::LawInvariance}); },
                        [](const metric::Entropic&) {
                          return axiom_set({P::Monotonicity, P::TranslationInvariance, P::LawInvariance});
                        },
                        [](const metric::Semideviation&) {
                          return axiom_set({P::Monotonicity, P::TranslationInvariance, P::PositiveHomogeneity,
                                            P::Subadditivity, P::LawInvariance});
                        },
                        [](const auto&) { return all_axioms(); },
                    },
                    spec.kind());
}

using Metric = std::function<double(const CostRandomVariable&)>;

/// A black-box metric together with the axioms it is claimed to satisfy.
struct MetricUnderTest {
  std::string name;
  Metric eval;
  AxiomSet claimed;
};

[[nodiscard]] inline MetricUnderTest metric_under_test(const MetricSpec& spec) {
  return {spec.name(), [spec](const CostRandomVariable& z) { return evaluate(spec, z); }, reference_axioms(spec)};
}

/// One instance of an axiom's relation. `inputs` holds Z (and Z' where the
/// axiom takes two variables); `parameter` is c for A2, beta for A3 and
/// lambda for convexity.
struct AuditCase {
  std::string source;
  std::vector<CostRandomVariable> inputs;
  double parameter = 0.0;
};

/// Both sides of the relation evaluated on one case.
struct RelationCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double excess = 0.0;     // how far the relation fails; <= 0 when it holds exactly
  double tolerance = 0.0;  // kAuditTolerance * (1 + max(|lhs|, |rhs|))

  [[nodiscard]] bool violated() const noexcept { return excess > tolerance; }
};

/// Evaluates the relation for `property` on `c`:
///   A1: rho(Z) <= rho(Z')            A2: rho(Z + c) = rho(Z) + c
///   A3: rho(bZ) = b rho(Z)           A4: rho(Z + Z') <= rho(Z) + rho(Z')
///   A5: rho(Z + Z') = rho(Z) + rho(Z') for comonotone Z, Z'
///   A6: rho(Z) = rho(Z')             convexity: rho(lZ + (1-l)Z') <= l rho(Z) + (1-l) rho(Z')
[[nodiscard]] inline RelationCheck check_relation(Property property, const Metric& rho, const AuditCase& c) {
  const auto& z = c.inputs.at(0);
  RelationCheck r;
  bool two_sided = true;
  switch (property) {
    case Property::Monotonicity:
      r.lhs = rho(z);
      r.rhs = rho(c.inputs.at(1));
      two_sided = false;
      break;
    case Property::TranslationInvariance:
      r.lhs = rho(z.shifted(c.parameter));
      r.rhs = rho(z) + c.parameter;
      break;
    case Property::PositiveHomogeneity:
      r.lhs = rho(z.scaled(c.parameter));
      r.rhs = c.parameter * rho(z);
      break;
    case Property::Subadditivity:
      r.lhs = rho(z + c.inputs.at(1));
      r.rhs = rho(z) + rho(c.inputs.at(1));
      two_sided = false;
      break;
    case Property::ComonotoneAdditivity:
      r.lhs = rho(z + c.inputs.at(1));
      r.rhs = rho(z) + rho(c.inputs.at(1));
      break;
    case Property::LawInvariance:
      r.lhs = rho(z);
      r.rhs = rho(c.inputs.at(1));
      break;
    case Property::Convexity: {
      const double l = c.parameter;
      r.lhs = rho(z.scaled(l) + c.inputs.at(1).scaled(1.0 - l));
      r.rhs = l * rho(z) + (1.0 - l) * rho(c.inputs.at(1));
      two_sided = false;
      break;
    }
  }
  r.excess = two_sided ? std::abs(r.lhs - r.rhs) : r.lhs - r.rhs;
  r.tolerance = kAuditTolerance * (1.0 + std::max(std::abs(r.lhs), std::abs(r.rhs)));
  return r;
}

struct Counterexample {
  AuditCase instance;
  RelationCheck check;
};

struct PropertyVerdict {
  Property property = Property::Monotonicity;
  Verdict verdict = Verdict::NoViolationFound;
  std::size_t trials = 0;  // cases evaluated, fixed cases included
  std::optional<Counterexample> counterexample;

  [[nodiscard]] bool violated() const noexcept { return verdict == Verdict::Violated; }
};

/// Re-evaluates a stored counterexample against `rho`.
[[nodiscard]] inline RelationCheck replay(const PropertyVerdict& v, const Metric& rho) {
  if (!v.counterexample) throw std::logic_error("verdict carries no counterexample");
  return check_relation(v.property, rho, v.counterexample->instance);
}

namespace detail {

// Fixed cases replayed ahead of the random trials.
inline std::vector<AuditCase> museum_cases(Property p) {
  const auto [t1z, t1zp] = museum::table1_pair();
  const auto [t2z, t2zp] = museum::table2_pair();
  switch (p) {
    case Property::Monotonicity:
      return {{"table 1 pair (Z <= Z' pointwise)", {t1z, t1zp}}};
    case Property::TranslationInvariance:
      return {{"table 2 Z, c = 1", {t2z}, 1.0}, {"table 2 Z', c = -2.5", {t2zp}, -2.5}};
    case Property::PositiveHomogeneity:
      return {{"table 2 Z, beta = 2", {t2z}, 2.0}, {"table 1 Z, beta = 0.5", {t1z}, 0.5}};
    case Property::Subadditivity:
      return {{"table 2 pair", {t2z, t2zp}}, {"table 1 pair", {t1z, t1zp}}};
    case Property::ComonotoneAdditivity:
      return {{"table 1 pair (comonotone)", {t1z, t1zp}}};
    case Property::LawInvariance: {
      const auto [s, sp] = museum::swap_pair();
      return {{"swap pair (costs 1 and 10 exchanged)", {s, sp}}};
    }
    case Property::Convexity:
      return {{"table 1 pair, lambda = 0.5", {t1z, t1zp}, 0.5}};
  }
  return {};
}

// Nondecreasing piecewise-linear map with random knots and nonnegative slopes.
class MonotoneMap {
 public:
  MonotoneMap(Sampler& s, double lo, double hi) {
    const std::size_t pieces = s.index(1, 3);
    for (std::size_t i = 0; i < pieces; ++i) knots_.push_back(s.uniform(lo, hi));
    std::sort(knots_.begin(), knots_.end());
    for (std::size_t i = 0; i <= pieces; ++i) slopes_.push_back(s.chance(0.2) ? 0.0 : s.uniform(0.0, 3.0));
    offset_ = s.uniform(-5.0, 5.0);
  }

  double operator()(double x) const {
    double y = offset_ + slopes_[0] * (std::min(x, knots_[0]) - knots_[0]);
    for (std::size_t i = 0; i < knots_.size(); ++i) {
      const double right = i + 1 < knots_.size() ? knots_[i + 1] : std::numeric_limits<double>::infinity();
      if (x > knots_[i]) y += slopes_[i + 1] * (std::min(x, right) - knots_[i]);
    }
    return y;
  }

 private:
  std::vector<double> knots_;
  std::vector<double> slopes_;
  double offset_ = 0.0;
};

inline AuditCase random_case(Property p, Sampler& s, std::size_t trial) {
  AuditCase c;
  c.source = "trial " + std::to_string(trial);
  const std::size_t n = s.index(2, 8);
  const bool lattice = s.chance(0.25);
  switch (p) {
    case Property::Monotonicity: {
      auto space = s.space(n);
      auto v = s.costs(n, lattice);
      auto w = v;
      for (double& x : w)
        if (s.chance(0.5)) x += lattice ? static_cast<double>(s.index(1, 3)) : s.uniform(0.0, 5.0);
      c.inputs = {CostRandomVariable(space, std::move(v)), CostRandomVariable(space, std::move(w))};
      break;
    }
    case Property::TranslationInvariance:
      c.inputs = {CostRandomVariable(s.space(n), s.costs(n, lattice))};
      c.parameter = s.uniform(-10.0, 10.0);
      break;
    case Property::PositiveHomogeneity:
      c.inputs = {CostRandomVariable(s.space(n), s.costs(n, lattice))};
      c.parameter = s.chance(0.05) ? 0.0 : s.uniform(0.0, 5.0);
      break;
    case Property::Subadditivity:
    case Property::Convexity: {
      auto space = s.space(n);
      auto v = s.costs(n, lattice);
      std::vector<double> w;
      if (s.chance(0.25)) {
        w = v;  // a relabeling of the same costs
        s.shuffle(w);
      } else {
        w = s.costs(n, lattice);
      }
      c.inputs = {CostRandomVariable(space, std::move(v)), CostRandomVariable(space, std::move(w))};
      if (p == Property::Convexity) c.parameter = s.uniform(0.0, 1.0);
      break;
    }
    case Property::ComonotoneAdditivity: {
      auto space = s.space(n);
      const auto w = s.costs(n, lattice);
      const MonotoneMap f(s, -10.0, 10.0);
      std::vector<double> zv(n), zpv(n);
      if (s.chance(0.1)) {
        const double k = s.uniform(-10.0, 10.0);
        for (std::size_t i = 0; i < n; ++i) {
          zv[i] = f(w[i]);
          zpv[i] = k;
        }
      } else {
        const MonotoneMap h(s, -10.0, 10.0);
        for (std::size_t i = 0; i < n; ++i) {
          zv[i] = f(w[i]);
          zpv[i] = h(w[i]);
        }
      }
      c.inputs = {CostRandomVariable(space, std::move(zv)), CostRandomVariable(space, std::move(zpv))};
      if (!is_comonotone(c.inputs[0], c.inputs[1]))
        throw std::logic_error("comonotone pair generator produced a non-comonotone pair");
      break;
    }
    case Property::LawInvariance: {
      if (s.chance(0.5)) {
        auto space = std::make_shared<const ProbabilitySpace>(ProbabilitySpace::uniform(n));
        auto v = s.costs(n, lattice);
        auto w = v;
        s.shuffle(w);
        c.inputs = {CostRandomVariable(space, std::move(v)), CostRandomVariable(std::move(space), std::move(w))};
      } else {
        const auto probs = s.pmf(n);
        auto v = s.costs(n, lattice);
        const std::size_t j = s.index(0, n - 1);
        std::vector<double> split_probs, split_values;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == j) {
            split_probs.insert(split_probs.end(), {probs[i] / 2, probs[i] / 2});
            split_values.insert(split_values.end(), {v[i], v[i]});
          } else {
            split_probs.push_back(probs[i]);
            split_values.push_back(v[i]);
          }
        }
        c.inputs = {CostRandomVariable(probs, std::move(v)),
                    CostRandomVariable(std::move(split_probs), std::move(split_values))};
      }
      break;
    }
  }
  return c;
}

}  // namespace detail

/// Replays the fixed cases for `property`, then up to `trials` random cases,
/// stopping at the first violation.
[[nodiscard]] inline PropertyVerdict audit_property(Property property, const Metric& rho, std::size_t trials,
                                                    std::uint64_t seed) {
  PropertyVerdict v;
  v.property = property;
  auto try_case = [&](AuditCase c) {
    ++v.trials;
    const RelationCheck r = check_relation(property, rho, c);
    if (r.violated()) {
      v.verdict = Verdict::Violated;
      v.counterexample = Counterexample{std::move(c), r};
      return true;
    }
    return false;
  };
  for (auto& c : detail::museum_cases(property))
    if (try_case(std::move(c))) return v;
  Sampler s(seed, static_cast<std::uint64_t>(property) + 1);
  for (std::size_t t = 0; t < trials; ++t)
    if (try_case(detail::random_case(property, s, t))) return v;
  return v;
}

[[nodiscard]] inline PropertyVerdict audit_monotonicity(const MetricUnderTest& m, std::size_t trials,
                                                        std::uint64_t seed) {
  return audit_property(Property::Monotonicity, m.eval, trials, seed);
}
[[nodiscard]] inline PropertyVerdict audit_translation(const MetricUnderTest& m, std::size_t trials,
                                                       std::uint64_t seed) {
  return audit_property(Property::TranslationInvariance, m.eval, trials, seed);
}
[[nodiscard]] inline PropertyVerdict audit_homogeneity(const MetricUnderTest& m, std::size_t trials,
                                                       std::uint64_t seed) {
  return audit_property(Property::PositiveHomogeneity, m.eval, trials, seed);
}
[[nodiscard]] inline PropertyVerdict audit_subadditivity(const MetricUnderTest& m, std::size_t trials,
                                                         std::uint64_t seed) {
  return audit_property(Property::Subadditivity, m.eval, trials, seed);
}
[[nodiscard]] inline PropertyVerdict audit_comonotone_additivity(const MetricUnderTest& m, std::size_t trials,
                                                                 std::uint64_t seed) {
  return audit_property(Property::ComonotoneAdditivity, m.eval, trials, seed);
}
[[nodiscard]] inline PropertyVerdict audit_law_invariance(const MetricUnderTest& m, std::size_t trials,
                                                          std::uint64_t seed) {
  return audit_property(Property::LawInvariance, m.eval, trials, seed);
}
/// rho(lZ + (1-l)Z') <= l rho(Z) + (1-l) rho(Z'); follows from A3 and A4.
[[nodiscard]] inline PropertyVerdict audit_convexity(const MetricUnderTest& m, std::size_t trials,
                                                     std::uint64_t seed) {
  return audit_property(Property::Convexity, m.eval, trials, seed);
}

struct AuditReport {
  std::string metric;
  std::uint64_t seed = 0;
  std::size_t trials = 0;  // random trials requested per axiom
  AxiomSet claimed;
  std::array<PropertyVerdict, 6> verdicts;

  /// Axioms for which no violation was found.
  [[nodiscard]] AxiomSet unrefuted() const {
    AxiomSet s;
    for (std::size_t i = 0; i < 6; ++i) s.set(i, !verdicts[i].violated());
    return s;
  }

  /// Axioms where the audit outcome disagrees with the claim.
  [[nodiscard]] AxiomSet discrepancies() const { return unrefuted() ^ claimed; }
};

[[nodiscard]] inline AuditReport audit_all(const MetricUnderTest& m, std::size_t trials, std::uint64_t seed) {
  AuditReport r;
  r.metric = m.name;
  r.seed = seed;
  r.trials = trials;
  r.claimed = m.claimed;
  for (std::size_t i = 0; i < kAxioms.size(); ++i) r.verdicts[i] = audit_property(kAxioms[i], m.eval, trials, seed);
  return r;
}

/// The seven metrics of the standard comparison table, each with its
/// tabulated axioms as the claim.
[[nodiscard]] inline std::vector<MetricUnderTest> table3_metrics() {
  std::vector<MetricUnderTest> out;
  for (const auto& spec : {MetricSpec::cvar(0.5), MetricSpec::expected(), MetricSpec::worst_case(),
                           MetricSpec::mean_variance(1.0), MetricSpec::entropic(1.0), MetricSpec::var(0.5),
                           MetricSpec::semideviation(1.0)})
    out.push_back(metric_under_test(spec));
  return out;
}

namespace detail {

inline std::string sig10(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

inline std::string pad(std::string s, std::size_t width) {
  // Width counts code points so the en dash in axiom ranges lines up.
  std::size_t cps = 0;
  for (unsigned char ch : s) cps += (ch & 0xC0) != 0x80;
  if (cps < width) s.append(width - cps, ' ');
  return s;
}

}  // namespace detail

/// Matrix of audit outcomes, one row per metric: "ok" means no violation
/// found, "X" a violation; a trailing "!" marks disagreement with the claim.
[[nodiscard]] inline std::string render_table(std::span<const AuditReport> reports) {
  using detail::pad;
  std::size_t name_w = 6;
  for (const auto& r : reports) name_w = std::max(name_w, r.metric.size());
  std::ostringstream os;
  os << pad("metric", name_w) << " | ";
  for (Property a : kAxioms) os << pad(std::string(label(a)), 4);
  os << "| " << pad("claimed", 18) << "| unrefuted\n";
  os << std::string(name_w, '-') << "-+-" << std::string(24, '-') << "+-" << std::string(18, '-') << "+-"
     << std::string(18, '-') << "\n";
  bool any_discrepancy = false;
  for (const auto& r : reports) {
    os << pad(r.metric, name_w) << " | ";
    const AxiomSet diff = r.discrepancies();
    for (std::size_t i = 0; i < 6; ++i) {
      std::string cell = r.verdicts[i].violated() ? "X" : "ok";
      if (diff.test(i)) cell += "!";
      os << pad(cell, 4);
    }
    os << "| " << pad(format_axioms(r.claimed), 18) << "| " << format_axioms(r.unrefuted()) << "\n";
    any_discrepancy = any_discrepancy || diff.any();
  }
  os << "\nok = no violation found (not a proof), X = counterexample found.\n";
  if (any_discrepancy) {
    os << "Discrepancies with the claimed axioms (marked !):\n";
    for (const auto& r : reports) {
      const AxiomSet diff = r.discrepancies();
      for (std::size_t i = 0; i < 6; ++i) {
        if (!diff.test(i)) continue;
        os << "  " << r.metric << " " << label(kAxioms[i]) << ": "
           << (r.claimed.test(i) ? "claimed, but a counterexample was found" : "not claimed, but no violation found in " +
                                                                                  std::to_string(r.verdicts[i].trials) +
                                                                                  " cases")
           << "\n";
      }
    }
  }
  return os.str();
}

[[nodiscard]] inline std::string render_report(const AuditReport& r) {
  std::ostringstream os;
  os << "audit of " << r.metric << " (seed " << r.seed << ", " << r.trials << " random trials per axiom)\n";
  for (const auto& v : r.verdicts) {
    os << "  " << label(v.property) << " " << detail::pad(std::string(describe(v.property)), 24) << " "
       << to_string(v.verdict) << " after " << v.trials << " cases";
    if (r.claimed.test(static_cast<std::size_t>(v.property)) == v.violated()) os << "  [disagrees with claim]";
    os << "\n";
    if (v.counterexample) {
      const auto& c = *v.counterexample;
      os << "      witness: " << c.instance.source << "; lhs " << detail::sig10(c.check.lhs) << ", rhs "
         << detail::sig10(c.check.rhs) << ", excess " << detail::sig10(c.check.excess) << " > tolerance "
         << detail::sig10(c.check.tolerance) << "\n";
    }
  }
  return os.str();
}

struct Table1Demo {
  double mean_variance_z = 0.0;
  double mean_variance_zprime = 0.0;
  bool z_pointwise_cheaper = false;
  PropertyVerdict monotonicity;  // mean-variance (beta = 1), fixed cases only

  [[nodiscard]] std::string render() const {
    std::ostringstream os;
    os << "outcome probabilities 0.25 each\n"
       << "  Z  = (1, 2, 3, 4)\n  Z' = (2, 2, 3, 4)\n"
       << "Z <= Z' in every outcome: " << (z_pointwise_cheaper ? "yes" : "no") << "\n"
       << "E[Z]  + Var[Z]  = " << detail::sig10(mean_variance_z) << "\n"
       << "E[Z'] + Var[Z'] = " << detail::sig10(mean_variance_zprime) << "\n"
       << "mean-variance prefers " << (mean_variance_zprime < mean_variance_z ? "Z'" : "Z")
       << "; monotonicity requires preferring Z\n"
       << "A1 audit of mean_variance(1): " << to_string(monotonicity.verdict);
    if (monotonicity.counterexample) os << " (witness: " << monotonicity.counterexample->instance.source << ")";
    os << "\n";
    return os.str();
  }
};

[[nodiscard]] inline Table1Demo demo_table1() {
  const auto [z, zp] = museum::table1_pair();
  Table1Demo d;
  d.mean_variance_z = mean_variance(z, 1.0);
  d.mean_variance_zprime = mean_variance(zp, 1.0);
  d.z_pointwise_cheaper = true;
  for (std::size_t i = 0; i < z.size(); ++i) d.z_pointwise_cheaper = d.z_pointwise_cheaper && z[i] <= zp[i];
  d.monotonicity = audit_monotonicity(metric_under_test(MetricSpec::mean_variance(1.0)), 0, 0);
  return d;
}

struct Table2Demo {
  double var_z = 0.0;
  double var_zprime = 0.0;
  double cvar_z = 0.0;
  double cvar_zprime = 0.0;

  [[nodiscard]] std::string render() const {
    std::ostringstream os;
    os << "outcome probabilities (0.4, 0.4, 0.2)\n"
       << "  Z  = (1, 2, 3)\n  Z' = (1, 1.99, 1e10)\n"
       << "VaR_0.3(Z)  = " << detail::sig10(var_z) << "\n"
       << "VaR_0.3(Z') = " << detail::sig10(var_zprime) << "\n"
       << "VaR prefers " << (var_zprime < var_z ? "Z'" : "Z") << "\n"
       << "CVaR_0.3(Z)  = " << detail::sig10(cvar_z) << "\n"
       << "CVaR_0.3(Z') = " << detail::sig10(cvar_zprime) << "\n"
       << "CVaR prefers " << (cvar_z < cvar_zprime ? "Z" : "Z'") << "\n";
    return os.str();
  }
};

[[nodiscard]] inline Table2Demo demo_table2() {
  const auto [z, zp] = museum::table2_pair();
  return {value_at_risk(z, 0.3), value_at_risk(zp, 0.3), cvar(z, 0.3), cvar(zp, 0.3)};
}

}  // namespace riskax

#endif  // RISKAX_AUDIT_HPP
