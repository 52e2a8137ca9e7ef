#ifndef RISKAX_PROBABILITY_HPP
#define RISKAX_PROBABILITY_HPP

// Finite probability spaces, cost random variables and their canonical
// distributions. Outcome identity is the index 0..n-1.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <memory>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace riskax {

/// Raised for inputs that violate a documented precondition (bad probabilities,
/// non-finite costs, out-of-range metric parameters, mismatched dimensions).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kProbabilityTolerance = 1e-9;
inline constexpr double kMergeTolerance = 1e-12;

namespace detail {

inline std::string fmt_index(std::size_t i) { return "[" + std::to_string(i) + "]"; }

// Sum in a fixed order so every caller sees the same rounding.
inline double ordered_sum(std::span<const double> xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s;
}

}  // namespace detail

/// Probability mass over outcomes 0..n-1. Masses are renormalized at
/// construction so that they sum to exactly 1 in working precision.
class ProbabilitySpace {
 public:
  explicit ProbabilitySpace(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw ValidationError("probability space needs at least one outcome");
    for (std::size_t i = 0; i < probs_.size(); ++i) {
      if (!std::isfinite(probs_[i]) || probs_[i] < 0.0)
        throw ValidationError("probs" + detail::fmt_index(i) + " must be a finite nonnegative number");
    }
    const double total = detail::ordered_sum(probs_);
    if (std::abs(total - 1.0) > kProbabilityTolerance)
      throw ValidationError("probabilities sum to " + std::to_string(total) + ", expected 1");
    for (double& p : probs_) p /= total;
    // Push the last rounding residue into the largest mass.
    const auto largest = std::max_element(probs_.begin(), probs_.end());
    *largest = std::max(0.0, *largest + (1.0 - detail::ordered_sum(probs_)));
    for (int pass = 0; pass < 64; ++pass) {
      const double residue = 1.0 - detail::ordered_sum(probs_);
      if (residue == 0.0) break;
      *largest = std::nextafter(*largest, residue > 0.0 ? 2.0 : 0.0);
    }
    if (detail::ordered_sum(probs_) != 1.0) {
      // Stepping one mass can skip 1.0; close the sum on the last positive mass.
      std::size_t last = probs_.size() - 1;
      while (last > 0 && probs_[last] == 0.0) --last;
      const double head = detail::ordered_sum(std::span<const double>(probs_).first(last));
      probs_[last] = std::max(0.0, 1.0 - head);
    }
  }

  static ProbabilitySpace uniform(std::size_t n) {
    if (n == 0) throw ValidationError("probability space needs at least one outcome");
    return ProbabilitySpace(std::vector<double>(n, 1.0 / static_cast<double>(n)));
  }

  [[nodiscard]] std::size_t size() const noexcept { return probs_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return probs_[i]; }
  [[nodiscard]] std::span<const double> probs() const noexcept { return probs_; }
  /// Same outcome count and masses equal within 1e-12.
  [[nodiscard]] bool compatible(const ProbabilitySpace& other) const noexcept {
    if (size() != other.size()) return false;
    for (std::size_t i = 0; i < size(); ++i)
      if (std::abs(probs_[i] - other.probs_[i]) > kMergeTolerance) return false;
    return true;
  }

  friend bool operator==(const ProbabilitySpace&, const ProbabilitySpace&) = default;

 private:
  std::vector<double> probs_;
};

/// A monetary cost per outcome of a shared, immutable probability space.
class CostRandomVariable {
 public:
  CostRandomVariable(std::shared_ptr<const ProbabilitySpace> space, std::vector<double> values)
      : space_(std::move(space)), values_(std::move(values)) {
    if (!space_) throw ValidationError("cost random variable needs a probability space");
    if (values_.size() != space_->size())
      throw ValidationError("values has " + std::to_string(values_.size()) + " entries but the space has " +
                            std::to_string(space_->size()) + " outcomes");
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!std::isfinite(values_[i]))
        throw ValidationError("values" + detail::fmt_index(i) + " must be finite");
    }
  }

  CostRandomVariable(ProbabilitySpace space, std::vector<double> values)
      : CostRandomVariable(std::make_shared<const ProbabilitySpace>(std::move(space)), std::move(values)) {}

  CostRandomVariable(std::vector<double> probs, std::vector<double> values)
      : CostRandomVariable(ProbabilitySpace(std::move(probs)), std::move(values)) {}

  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
  [[nodiscard]] std::span<const double> probs() const noexcept { return space_->probs(); }
  [[nodiscard]] const ProbabilitySpace& space() const noexcept { return *space_; }
  [[nodiscard]] const std::shared_ptr<const ProbabilitySpace>& shared_space() const noexcept { return space_; }

  /// Same space, new values.
  [[nodiscard]] CostRandomVariable with_values(std::vector<double> values) const {
    return CostRandomVariable(space_, std::move(values));
  }

  [[nodiscard]] CostRandomVariable shifted(double c) const {
    std::vector<double> v(values_);
    for (double& x : v) x += c;
    return with_values(std::move(v));
  }

  [[nodiscard]] CostRandomVariable scaled(double beta) const {
    std::vector<double> v(values_);
    for (double& x : v) x *= beta;
    return with_values(std::move(v));
  }

  friend CostRandomVariable operator+(const CostRandomVariable& a, const CostRandomVariable& b) {
    if (!a.space().compatible(b.space()))
      throw ValidationError("cannot add cost random variables on incompatible spaces");
    std::vector<double> v(a.values_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values_[i];
    return a.with_values(std::move(v));
  }

 private:
  std::shared_ptr<const ProbabilitySpace> space_;
  std::vector<double> values_;
};

struct Atom {
  double value;
  double prob;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Canonical law of a cost random variable: atoms sorted by strictly
/// increasing value, equal values merged and zero-mass atoms dropped.
class Distribution {
 public:
  explicit Distribution(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}

  [[nodiscard]] std::span<const Atom> atoms() const noexcept { return atoms_; }
  [[nodiscard]] std::size_t size() const noexcept { return atoms_.size(); }
  [[nodiscard]] const Atom& operator[](std::size_t i) const { return atoms_[i]; }
  [[nodiscard]] double min_value() const { return atoms_.front().value; }
  [[nodiscard]] double max_value() const { return atoms_.back().value; }

 private:
  std::vector<Atom> atoms_;
};

[[nodiscard]] inline double expectation(const CostRandomVariable& z) {
  double s = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) s += z.probs()[i] * z[i];
  return s;
}

/// Central second moment. Computed as E[(Z - E Z)^2], which equals
/// E[Z^2] - E[Z]^2 without the cancellation.
[[nodiscard]] inline double variance(const CostRandomVariable& z) {
  const double mean = expectation(z);
  double s = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double d = z[i] - mean;
    s += z.probs()[i] * d * d;
  }
  return s;
}

/// Largest cost among outcomes with positive mass.
[[nodiscard]] inline double worst_case(const CostRandomVariable& z) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z.probs()[i] > 0.0) best = std::max(best, z[i]);
  return best;
}

[[nodiscard]] inline Distribution distribution_of(const CostRandomVariable& z) {
  std::vector<Atom> raw;
  raw.reserve(z.size());
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z.probs()[i] > 0.0) raw.push_back({z[i], z.probs()[i]});
  std::sort(raw.begin(), raw.end(), [](const Atom& a, const Atom& b) {
    return a.value < b.value || (a.value == b.value && a.prob < b.prob);
  });
  std::vector<Atom> merged;
  for (const Atom& a : raw) {
    if (!merged.empty() && std::abs(a.value - merged.back().value) <= kMergeTolerance)
      merged.back().prob += a.prob;
    else
      merged.push_back(a);
  }
  return Distribution(std::move(merged));
}

/// Brute-force check of (Z(w) - Z(w'))(Z'(w) - Z'(w')) >= 0 over all pairs.
[[nodiscard]] inline bool is_comonotone(const CostRandomVariable& z, const CostRandomVariable& zp) {
  if (!z.space().compatible(zp.space()))
    throw ValidationError("comonotonicity requires random variables on the same space");
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < z.size(); ++j)
      if ((z[i] - z[j]) * (zp[i] - zp[j]) < -kMergeTolerance) return false;
  return true;
}

[[nodiscard]] inline bool identically_distributed(const Distribution& a, const Distribution& b,
                                                  double tol = kProbabilityTolerance) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i].value - b[i].value) > tol || std::abs(a[i].prob - b[i].prob) > tol) return false;
  }
  return true;
}

[[nodiscard]] inline bool identically_distributed(const CostRandomVariable& z, const CostRandomVariable& zp,
                                                  double tol = kProbabilityTolerance) {
  return identically_distributed(distribution_of(z), distribution_of(zp), tol);
}

}  // namespace riskax

#endif  // RISKAX_PROBABILITY_HPP
