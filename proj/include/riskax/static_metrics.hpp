#ifndef RISKAX_STATIC_METRICS_HPP
#define RISKAX_STATIC_METRICS_HPP

// Closed-form static risk metrics over finite cost distributions.
//
// Conventions for the tail level alpha: CVaR_alpha is the mean of the
// upper tail carrying probability mass alpha, so alpha = 1 gives the
// expectation and alpha -> 0 gives the worst case. VaR_alpha is the
// smallest z with P[Z > z] <= alpha.

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "riskax/probability.hpp"

namespace riskax {

namespace detail {

// Slack on tail-mass comparisons so that masses which are equal in exact arithmetic but
// summed in a different order still compare equal.
inline constexpr double kTailSlack = 1e-12;

inline void require_level(double alpha, bool allow_zero, bool allow_one, const char* what) {
  const bool ok = std::isfinite(alpha) && (allow_zero ? alpha >= 0.0 : alpha > 0.0) &&
                  (allow_one ? alpha <= 1.0 : alpha < 1.0);
  if (!ok) throw ValidationError(std::string(what) + " level alpha=" + std::to_string(alpha) + " is out of range");
}

}  // namespace detail

/// Smallest support value z with P[Z > z] <= alpha. Requires 0 <= alpha < 1.
[[nodiscard]] inline double value_at_risk(const CostRandomVariable& z, double alpha) {
  detail::require_level(alpha, /*allow_zero=*/true, /*allow_one=*/false, "VaR");
  const Distribution dist = distribution_of(z);
  const auto atoms = dist.atoms();
  // Walk down from the top; `above` is P[Z > atoms[i].value].
  double above = 0.0;
  double answer = atoms.back().value;
  for (std::size_t k = atoms.size(); k-- > 0;) {
    if (above <= alpha + detail::kTailSlack)
      answer = atoms[k].value;
    else
      break;
    above += atoms[k].prob;
  }
  return answer;
}

/// Mean of the upper tail of mass alpha, evaluated exactly on the atoms.
/// alpha = 0 is the worst case by convention.
[[nodiscard]] inline double cvar(const CostRandomVariable& z, double alpha) {
  detail::require_level(alpha, /*allow_zero=*/true, /*allow_one=*/true, "CVaR");
  if (alpha == 0.0) return worst_case(z);
  if (alpha == 1.0) return expectation(z);
  const Distribution dist = distribution_of(z);
  const auto atoms = dist.atoms();
  double remaining = alpha;
  double acc = 0.0;
  for (std::size_t k = atoms.size(); k-- > 0 && remaining > 0.0;) {
    const double take = std::min(atoms[k].prob, remaining);
    acc += atoms[k].value * take;
    remaining -= take;
  }
  // Only reachable through rounding of the total mass.
  if (remaining > 0.0) acc += atoms.front().value * remaining;
  return acc / alpha;
}

/// min_z z + E[(Z - z)^+] / alpha, scanned over the support. Used as an
/// independent cross-check of cvar().
[[nodiscard]] inline double cvar_variational(const CostRandomVariable& z, double alpha) {
  detail::require_level(alpha, /*allow_zero=*/true, /*allow_one=*/true, "CVaR");
  if (alpha == 0.0) return worst_case(z);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < z.size(); ++c) {
    if (z.probs()[c] <= 0.0) continue;
    const double t = z[c];
    double excess = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) excess += z.probs()[i] * std::max(z[i] - t, 0.0);
    best = std::min(best, t + excess / alpha);
  }
  return best;
}

[[nodiscard]] inline double mean_variance(const CostRandomVariable& z, double beta) {
  if (!std::isfinite(beta) || beta < 0.0) throw ValidationError("mean-variance weight beta must be >= 0");
  return expectation(z) + beta * variance(z);
}

/// (1/theta) log E[exp(theta Z)], shifted by max Z so 1e10-scale costs stay finite.
[[nodiscard]] inline double entropic(const CostRandomVariable& z, double theta) {
  if (!std::isfinite(theta) || theta <= 0.0) throw ValidationError("entropic coefficient theta must be > 0");
  const double top = worst_case(z);
  double s = 0.0;  // E[exp(theta (Z - top))] - 1
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z.probs()[i] > 0.0) s += z.probs()[i] * std::expm1(theta * (z[i] - top));
  return top + std::log1p(s) / theta;
}

/// E[Z] + c * sqrt(E[((Z - E Z)^+)^2]).
[[nodiscard]] inline double semideviation(const CostRandomVariable& z, double c) {
  if (!std::isfinite(c) || c < 0.0 || c > 1.0) throw ValidationError("semideviation weight c must lie in [0, 1]");
  const double mean = expectation(z);
  double s = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double up = std::max(z[i] - mean, 0.0);
    s += z.probs()[i] * up * up;
  }
  return mean + c * std::sqrt(s);
}

struct SpectralAtom {
  double level;
  double weight;

  friend bool operator==(const SpectralAtom&, const SpectralAtom&) = default;
};

/// Finitely supported probability measure over CVaR levels in [0, 1].
/// Atoms are sorted by level; equal levels (within 1e-12) are merged.
class SpectralMeasure {
 public:
  explicit SpectralMeasure(std::vector<SpectralAtom> atoms) {
    if (atoms.empty()) throw ValidationError("spectral measure needs at least one atom");
    double total = 0.0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      const auto& a = atoms[i];
      if (!std::isfinite(a.level) || a.level < 0.0 || a.level > 1.0)
        throw ValidationError("atoms" + detail::fmt_index(i) + ".alpha must lie in [0, 1]");
      if (!std::isfinite(a.weight) || a.weight <= 0.0)
        throw ValidationError("atoms" + detail::fmt_index(i) + ".weight must be > 0");
      total += a.weight;
    }
    if (std::abs(total - 1.0) > kProbabilityTolerance)
      throw ValidationError("spectral weights sum to " + std::to_string(total) + ", expected 1");
    std::sort(atoms.begin(), atoms.end(), [](const SpectralAtom& a, const SpectralAtom& b) {
      return a.level < b.level;
    });
    for (const auto& a : atoms) {
      if (!atoms_.empty() && std::abs(a.level - atoms_.back().level) <= kMergeTolerance)
        atoms_.back().weight += a.weight;
      else
        atoms_.push_back(a);
    }
  }

  static SpectralMeasure point(double level) { return SpectralMeasure({{level, 1.0}}); }

  [[nodiscard]] std::span<const SpectralAtom> atoms() const noexcept { return atoms_; }

  /// Distortion of a tail probability t: sum_i w_i min(t / alpha_i, 1),
  /// with alpha_i = 0 contributing w_i 1{t > 0}.
  [[nodiscard]] double distort(double t) const noexcept {
    double s = 0.0;
    for (const auto& a : atoms_) {
      if (a.level == 0.0)
        s += t > 0.0 ? a.weight : 0.0;
      else
        s += a.weight * std::min(t / a.level, 1.0);
    }
    return s;
  }

  friend bool operator==(const SpectralMeasure&, const SpectralMeasure&) = default;

 private:
  std::vector<SpectralAtom> atoms_;
};

/// Sum_i w_i CVaR_{alpha_i}(Z).
[[nodiscard]] inline double distortion_mixture(const CostRandomVariable& z, const SpectralMeasure& nu) {
  double s = 0.0;
  for (const auto& a : nu.atoms()) s += a.weight * cvar(z, a.level);
  return s;
}

namespace metric {

struct Expected {
  friend bool operator==(const Expected&, const Expected&) = default;
};
struct WorstCase {
  friend bool operator==(const WorstCase&, const WorstCase&) = default;
};
struct ValueAtRisk {
  double alpha;
  friend bool operator==(const ValueAtRisk&, const ValueAtRisk&) = default;
};
struct ConditionalValueAtRisk {
  double alpha;
  friend bool operator==(const ConditionalValueAtRisk&, const ConditionalValueAtRisk&) = default;
};
struct MeanVariance {
  double beta = 1.0;
  friend bool operator==(const MeanVariance&, const MeanVariance&) = default;
};
struct Entropic {
  double theta = 1.0;
  friend bool operator==(const Entropic&, const Entropic&) = default;
};
struct Semideviation {
  double c = 1.0;
  friend bool operator==(const Semideviation&, const Semideviation&) = default;
};
struct Mixture {
  SpectralMeasure nu;
  friend bool operator==(const Mixture&, const Mixture&) = default;
};

}  // namespace metric

/// Declarative description of one risk metric instance. Construct through
/// the named factories, which validate parameter ranges.
class MetricSpec {
 public:
  using Kind = std::variant<metric::Expected, metric::WorstCase, metric::ValueAtRisk, metric::ConditionalValueAtRisk,
                            metric::MeanVariance, metric::Entropic, metric::Semideviation, metric::Mixture>;

  static MetricSpec expected() { return MetricSpec(metric::Expected{}); }
  static MetricSpec worst_case() { return MetricSpec(metric::WorstCase{}); }
  static MetricSpec var(double alpha) {
    detail::require_level(alpha, true, false, "VaR");
    return MetricSpec(metric::ValueAtRisk{alpha});
  }
  static MetricSpec cvar(double alpha) {
    detail::require_level(alpha, true, true, "CVaR");
    return MetricSpec(metric::ConditionalValueAtRisk{alpha});
  }
  static MetricSpec mean_variance(double beta = 1.0) {
    if (!std::isfinite(beta) || beta < 0.0) throw ValidationError("mean-variance weight beta must be >= 0");
    return MetricSpec(metric::MeanVariance{beta});
  }
  static MetricSpec entropic(double theta = 1.0) {
    if (!std::isfinite(theta) || theta <= 0.0) throw ValidationError("entropic coefficient theta must be > 0");
    return MetricSpec(metric::Entropic{theta});
  }
  static MetricSpec semideviation(double c = 1.0) {
    if (!std::isfinite(c) || c < 0.0 || c > 1.0) throw ValidationError("semideviation weight c must lie in [0, 1]");
    return MetricSpec(metric::Semideviation{c});
  }
  static MetricSpec mixture(SpectralMeasure nu) { return MetricSpec(metric::Mixture{std::move(nu)}); }

  [[nodiscard]] const Kind& kind() const noexcept { return kind_; }

  /// Expected, worst case, CVaR and CVaR mixtures.
  [[nodiscard]] bool is_distortion() const noexcept {
    return std::holds_alternative<metric::Expected>(kind_) || std::holds_alternative<metric::WorstCase>(kind_) ||
           std::holds_alternative<metric::ConditionalValueAtRisk>(kind_) ||
           std::holds_alternative<metric::Mixture>(kind_);
  }

  [[nodiscard]] std::string name() const;

  friend bool operator==(const MetricSpec&, const MetricSpec&) = default;

 private:
  explicit MetricSpec(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

namespace detail {

inline std::string short_number(double x) {
  std::string s = std::to_string(x);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace detail

inline std::string MetricSpec::name() const {
  using detail::short_number;
  return std::visit(
      detail::overloaded{
          [](const metric::Expected&) { return std::string("expected"); },
          [](const metric::WorstCase&) { return std::string("worst_case"); },
          [](const metric::ValueAtRisk& m) { return "VaR(" + short_number(m.alpha) + ")"; },
          [](const metric::ConditionalValueAtRisk& m) { return "CVaR(" + short_number(m.alpha) + ")"; },
          [](const metric::MeanVariance& m) { return "mean_variance(" + short_number(m.beta) + ")"; },
          [](const metric::Entropic& m) { return "entropic(" + short_number(m.theta) + ")"; },
          [](const metric::Semideviation& m) { return "semideviation(" + short_number(m.c) + ")"; },
          [](const metric::Mixture& m) {
            std::string s = "mixture(";
            bool first = true;
            for (const auto& a : m.nu.atoms()) {
              s += (first ? "" : ", ") + short_number(a.weight) + "@" + short_number(a.level);
              first = false;
            }
            return s + ")";
          },
      },
      kind_);
}

[[nodiscard]] inline double evaluate(const MetricSpec& spec, const CostRandomVariable& z) {
  return std::visit(detail::overloaded{
                        [&](const metric::Expected&) { return expectation(z); },
                        [&](const metric::WorstCase&) { return worst_case(z); },
                        [&](const metric::ValueAtRisk& m) { return value_at_risk(z, m.alpha); },
                        [&](const metric::ConditionalValueAtRisk& m) { return cvar(z, m.alpha); },
                        [&](const metric::MeanVariance& m) { return mean_variance(z, m.beta); },
                        [&](const metric::Entropic& m) { return entropic(z, m.theta); },
                        [&](const metric::Semideviation& m) { return semideviation(z, m.c); },
                        [&](const metric::Mixture& m) { return distortion_mixture(z, m.nu); },
                    },
                    spec.kind());
}

}  // namespace riskax

#endif  // RISKAX_STATIC_METRICS_HPP
