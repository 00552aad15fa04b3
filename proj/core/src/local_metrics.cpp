#include "flownet/local_metrics.hpp"

#include <algorithm>
#include <numeric>

namespace flownet {

std::optional<double> ScoreVector::at(const CountryCode& code) const {
  if (!roster) return std::nullopt;
  auto it = std::lower_bound(roster->begin(), roster->end(), code);
  if (it == roster->end() || *it != code) return std::nullopt;
  return values[static_cast<std::size_t>(it - roster->begin())];
}

std::size_t ScoreVector::defined_count() const {
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [](const auto& v) { return v.has_value(); }));
}

namespace {

template <typename Fn>
ScoreVector per_node(const TimeSlice& s, std::string name, Fn fn) {
  ScoreVector v(std::move(name), s.year(), s.roster_ptr());
  for (NodeIndex i = 0; i < s.size(); ++i) v.values[i] = fn(i);
  return v;
}

}  // namespace

ScoreVector in_strength_scores(const TimeSlice& s) {
  return per_node(s, "in_strength",
                  [&](NodeIndex i) { return std::optional<double>(double(s.in_strength(i))); });
}

ScoreVector out_strength_scores(const TimeSlice& s) {
  return per_node(s, "out_strength",
                  [&](NodeIndex i) { return std::optional<double>(double(s.out_strength(i))); });
}

std::optional<double> drain_index(Weight out_strength, Weight in_strength) {
  if (out_strength + in_strength == 0) return std::nullopt;
  const double out = static_cast<double>(out_strength);
  const double in = static_cast<double>(in_strength);
  return (out - in) / (out + in);
}

std::optional<double> drain_index(const TimeSlice& s, NodeIndex i) {
  return drain_index(s.out_strength(i), s.in_strength(i));
}

ScoreVector drain_index_scores(const TimeSlice& s) {
  return per_node(s, "drain_index", [&](NodeIndex i) { return drain_index(s, i); });
}

std::optional<double> clustering_coefficient(const TimeSlice& s, NodeIndex i) {
  const auto nbrs = s.neighbors(i);
  const std::size_t k = nbrs.size();
  if (k < 2) return std::nullopt;
  std::size_t linked = 0;
  for (NodeIndex j : nbrs) {
    for (const Edge& e : s.out_edges(j)) {
      if (e.to != i && std::binary_search(nbrs.begin(), nbrs.end(), e.to)) ++linked;
    }
  }
  return static_cast<double>(linked) / static_cast<double>(k * (k - 1));
}

ScoreVector clustering_scores(const TimeSlice& s) {
  return per_node(s, "clustering", [&](NodeIndex i) { return clustering_coefficient(s, i); });
}

std::optional<double> node_reciprocity(const TimeSlice& s, NodeIndex i,
                                       ReciprocityVariant variant) {
  const auto nbrs = s.neighbors(i);
  if (nbrs.empty()) return std::nullopt;
  std::size_t mutual = 0;
  for (const Edge& e : s.out_edges(i)) {
    if (s.has_edge(e.to, i)) ++mutual;
  }
  const double factor = variant == ReciprocityVariant::paper ? 2.0 : 1.0;
  return factor * static_cast<double>(mutual) / static_cast<double>(nbrs.size());
}

ScoreVector node_reciprocity_scores(const TimeSlice& s, ReciprocityVariant variant) {
  return per_node(s,
                  variant == ReciprocityVariant::paper ? "reciprocity"
                                                       : "reciprocity_normalized",
                  [&](NodeIndex i) { return node_reciprocity(s, i, variant); });
}

std::optional<double> network_reciprocity(const TimeSlice& s) {
  const auto edges = s.edges();
  if (edges.empty()) return std::nullopt;
  std::size_t mutual = 0;
  for (const Edge& e : edges) {
    if (s.has_edge(e.to, e.from)) ++mutual;
  }
  return static_cast<double>(mutual) / static_cast<double>(edges.size());
}

std::optional<double> gini(std::span<const double> population) {
  if (population.empty()) return std::nullopt;
  std::vector<double> w(population.begin(), population.end());
  std::sort(w.begin(), w.end());
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  if (!(total > 0.0)) return std::nullopt;
  // Sum over ordered pairs of |w_i - w_j| equals 2 * sum_k (2k - n + 1) w_(k)
  // for the ascending order; the factor 2 cancels against the denominator.
  const double n = static_cast<double>(w.size());
  double weighted = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    weighted += (2.0 * static_cast<double>(k) - n + 1.0) * w[k];
  }
  return weighted / (n * total);
}

std::optional<LorenzCurve> lorenz(std::span<const double> population) {
  if (population.empty()) return std::nullopt;
  std::vector<double> w(population.begin(), population.end());
  std::sort(w.begin(), w.end());
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  if (!(total > 0.0)) return std::nullopt;

  LorenzCurve curve;
  const std::size_t n = w.size();
  curve.points.reserve(n + 1);
  curve.points.emplace_back(0.0, 0.0);
  double running = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    running += w[k - 1];
    const double x = k == n ? 1.0 : static_cast<double>(k) / static_cast<double>(n);
    const double y = k == n ? 1.0 : running / total;
    curve.points.emplace_back(x, y);
  }
  // Gini as one minus twice the area under the curve (trapezoids).
  double area2 = 0.0;
  for (std::size_t k = 1; k < curve.points.size(); ++k) {
    const auto [x0, y0] = curve.points[k - 1];
    const auto [x1, y1] = curve.points[k];
    area2 += (x1 - x0) * (y1 + y0);
  }
  curve.gini = 1.0 - area2;
  return curve;
}

std::vector<double> neighbor_weight_population(const TimeSlice& s, NodeIndex i, Side side) {
  std::vector<double> w;
  auto edges = side == Side::out ? s.out_edges(i) : s.in_edges(i);
  w.reserve(edges.size());
  for (const Edge& e : edges) w.push_back(static_cast<double>(e.weight));
  return w;
}

}  // namespace flownet
