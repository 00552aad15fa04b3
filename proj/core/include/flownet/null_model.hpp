#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "flownet/network.hpp"

namespace flownet {

using Seed = std::uint64_t;

/// Seed used whenever the caller does not supply one.
inline constexpr Seed kDefaultSeed = 20190101;

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed of realization k in an ensemble:
///   splitmix64(base_seed + (k + 1) * 0x9E3779B97F4A7C15)   (mod 2^64)
Seed derive_seed(Seed base_seed, std::uint64_t k) noexcept;

/// Pinned generator: std::mt19937_64 seeded with one 64-bit value. Bounded
/// draws use Lemire's multiply-shift rejection, so sequences do not depend on
/// the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Strength-preserving randomization: one unit stub per migrant, uniform
/// matching of out-stubs to in-stubs, self-loops removed by random pair swaps,
/// parallel matches merged into weights. Throws InfeasibleError when no
/// self-loop-free matching exists or the swap budget runs out.
TimeSlice configuration_model(const TimeSlice& s, Seed seed);

struct NullEnsemble {
  int base_year = 0;
  Seed base_seed = kDefaultSeed;
  std::vector<Seed> seeds;
  std::vector<TimeSlice> realizations;

  std::size_t size() const noexcept { return realizations.size(); }
};

/// n realizations seeded with derive_seed(base_seed, k), k = 0..n-1.
NullEnsemble ensemble(const TimeSlice& s, std::size_t n, Seed base_seed = kDefaultSeed);

/// Mean and 95% half-width 1.96 * sd / sqrt(count) of a sample. The CI is
/// nullopt for fewer than two values; the mean for none.
struct SampleSummary {
  std::optional<double> mean;
  std::optional<double> ci95;
  std::size_t count = 0;
};

SampleSummary summarize(std::span<const double> sample);

/// Applies `f` to each realization; undefined results are left out.
SampleSummary ensemble_statistic(const NullEnsemble& e,
                                 const std::function<std::optional<double>(const TimeSlice&)>& f);

/// Element-wise version for vector-valued metrics. All results must share a
/// length; element k summarizes the defined values at k.
std::vector<SampleSummary> ensemble_statistic_vector(
    const NullEnsemble& e,
    const std::function<std::vector<std::optional<double>>(const TimeSlice&)>& f);

}  // namespace flownet
