#include "flownet/null_model.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace flownet {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Seed derive_seed(Seed base_seed, std::uint64_t k) noexcept {
  return splitmix64(base_seed + (k + 1) * 0x9E3779B97F4A7C15ULL);
}

namespace {
__extension__ typedef unsigned __int128 uint128;
}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below with zero bound");
  // Lemire, "Fast Random Integer Generation in an Interval" (2019).
  uint128 m = static_cast<uint128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t floor = (0 - bound) % bound;
    while (low < floor) {
      m = static_cast<uint128>(next()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

TimeSlice configuration_model(const TimeSlice& s, Seed seed) {
  const Weight total = s.total_weight();
  if (total == 0) throw std::invalid_argument("configuration model needs at least one edge");
  for (NodeIndex i = 0; i < s.size(); ++i) {
    // Out-stubs of i can only pair with in-stubs of other nodes.
    if (s.out_strength(i) + s.in_strength(i) > total) {
      throw InfeasibleError("no self-loop-free matching: node " + s.node(i).str() +
                            " holds too many stubs in year " + std::to_string(s.year()));
    }
  }

  std::vector<NodeIndex> out_stubs, in_stubs;
  out_stubs.reserve(total);
  in_stubs.reserve(total);
  for (NodeIndex i = 0; i < s.size(); ++i) {
    out_stubs.insert(out_stubs.end(), s.out_strength(i), i);
    in_stubs.insert(in_stubs.end(), s.in_strength(i), i);
  }

  Rng rng(seed);
  rng.shuffle(std::span<NodeIndex>(in_stubs));

  const std::size_t m = out_stubs.size();
  std::uint64_t budget = 100 * static_cast<std::uint64_t>(m) + 1000;
  for (std::size_t p = 0; p < m; ++p) {
    while (out_stubs[p] == in_stubs[p]) {
      if (m < 2 || budget-- == 0) {
        throw InfeasibleError("self-loop elimination exhausted its swap budget in year " +
                              std::to_string(s.year()));
      }
      std::size_t q = static_cast<std::size_t>(rng.below(m - 1));
      if (q >= p) ++q;
      if (out_stubs[p] != in_stubs[q] && out_stubs[q] != in_stubs[p]) {
        std::swap(in_stubs[p], in_stubs[q]);
      }
    }
  }

  std::map<std::pair<NodeIndex, NodeIndex>, Weight> merged;
  for (std::size_t p = 0; p < m; ++p) ++merged[{out_stubs[p], in_stubs[p]}];
  std::vector<Edge> edges;
  edges.reserve(merged.size());
  for (const auto& [key, w] : merged) edges.push_back({key.first, key.second, w});
  return TimeSlice(s.year(), s.roster_ptr(), std::move(edges));
}

NullEnsemble ensemble(const TimeSlice& s, std::size_t n, Seed base_seed) {
  if (n < 1) throw std::invalid_argument("ensemble size must be >= 1");
  NullEnsemble e;
  e.base_year = s.year();
  e.base_seed = base_seed;
  for (std::size_t k = 0; k < n; ++k) {
    e.seeds.push_back(derive_seed(base_seed, k));
    e.realizations.push_back(configuration_model(s, e.seeds.back()));
  }
  return e;
}

SampleSummary summarize(std::span<const double> sample) {
  SampleSummary out;
  out.count = sample.size();
  if (sample.empty()) return out;
  double sum = 0.0;
  for (double x : sample) sum += x;
  const double n = static_cast<double>(sample.size());
  const double mean = sum / n;
  out.mean = mean;
  if (sample.size() >= 2) {
    double ss = 0.0;
    for (double x : sample) ss += (x - mean) * (x - mean);
    out.ci95 = 1.96 * std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  }
  return out;
}

SampleSummary ensemble_statistic(const NullEnsemble& e,
                                 const std::function<std::optional<double>(const TimeSlice&)>& f) {
  std::vector<double> values;
  for (const auto& r : e.realizations) {
    if (auto v = f(r)) values.push_back(*v);
  }
  return summarize(values);
}

std::vector<SampleSummary> ensemble_statistic_vector(
    const NullEnsemble& e,
    const std::function<std::vector<std::optional<double>>(const TimeSlice&)>& f) {
  std::vector<std::vector<double>> columns;
  for (const auto& r : e.realizations) {
    auto row = f(r);
    if (columns.empty()) columns.resize(row.size());
    if (row.size() != columns.size()) {
      throw std::invalid_argument("metric vectors differ in length across realizations");
    }
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k]) columns[k].push_back(*row[k]);
    }
  }
  std::vector<SampleSummary> out;
  out.reserve(columns.size());
  for (const auto& c : columns) out.push_back(summarize(c));
  return out;
}

}  // namespace flownet
