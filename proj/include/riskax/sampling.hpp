#ifndef RISKAX_SAMPLING_HPP
#define RISKAX_SAMPLING_HPP

// Seeded random instance generation shared by the axiom audit and the
// dynamic-risk falsifiers.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <vector>

#include "riskax/probability.hpp"
#include "riskax/static_metrics.hpp"

namespace riskax {

class Sampler {
 public:
  /// Independent streams for the same seed are selected by `stream`.
  explicit Sampler(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    rng_.seed(seq);
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  /// Inclusive range.
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool chance(double p) { return uniform(0.0, 1.0) < p; }

  /// Random pmf over n outcomes. Mixes equiprobable spaces, generic weights
  /// and spaces with a zero-mass outcome.
  std::vector<double> pmf(std::size_t n) {
    if (n > 1 && chance(0.2)) return std::vector<double>(n, 1.0 / static_cast<double>(n));
    std::vector<double> w(n);
    for (double& x : w) x = uniform(0.05, 1.0);
    if (n > 2 && chance(0.1)) w[index(0, n - 1)] = 0.0;
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (double& x : w) x /= total;
    return w;
  }

  std::shared_ptr<const ProbabilitySpace> space(std::size_t n) {
    return std::make_shared<const ProbabilitySpace>(pmf(n));
  }

  /// Uniform in [-10, 10]; with probability 0.05 an outlier of magnitude up to 1e6.
  double cost() {
    if (chance(0.05)) return (chance(0.5) ? 1.0 : -1.0) * uniform(0.0, 1e6);
    return uniform(-10.0, 10.0);
  }

  /// Costs for n outcomes. Lattice mode draws integers in [-3, 3], which
  /// produces the ties and coinciding tails that quantile metrics trip on.
  std::vector<double> costs(std::size_t n, bool lattice) {
    std::vector<double> v(n);
    for (double& x : v) x = lattice ? static_cast<double>(index(0, 6)) - 3.0 : cost();
    return v;
  }

  /// Random spectral measure with 1..4 atoms. Levels occasionally sit on
  /// the endpoints 0 and 1.
  SpectralMeasure spectral_measure() {
    const std::size_t k = index(1, 4);
    std::vector<SpectralAtom> atoms(k);
    double total = 0.0;
    for (auto& a : atoms) {
      const double u = uniform(0.0, 1.0);
      a.level = u < 0.1 ? 0.0 : (u < 0.2 ? 1.0 : uniform(0.01, 1.0));
      a.weight = uniform(0.1, 1.0);
      total += a.weight;
    }
    for (auto& a : atoms) a.weight /= total;
    return SpectralMeasure(std::move(atoms));
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), rng_);
  }

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace riskax

#endif  // RISKAX_SAMPLING_HPP
