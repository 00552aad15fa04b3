#include "flownet/betweenness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

namespace flownet {

namespace {

bool same_length(double a, double b) {
  return std::abs(a - b) <= kPathLengthTolerance * std::max(std::abs(a), std::abs(b));
}

// Brandes single-source pass on reciprocal-weight lengths; adds the source's
// dependencies into `acc`.
void accumulate_from(const TimeSlice& s, NodeIndex source, std::vector<double>& acc,
                     std::vector<double>& dist, std::vector<double>& sigma,
                     std::vector<double>& delta, std::vector<std::vector<NodeIndex>>& preds,
                     std::vector<NodeIndex>& order) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  const std::size_t n = s.size();
  std::fill(dist.begin(), dist.end(), inf);
  std::fill(sigma.begin(), sigma.end(), 0.0);
  std::fill(delta.begin(), delta.end(), 0.0);
  for (auto& p : preds) p.clear();
  order.clear();

  using Item = std::pair<double, NodeIndex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  std::vector<bool> settled(n, false);
  dist[source] = 0.0;
  sigma[source] = 1.0;
  queue.emplace(0.0, source);

  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (settled[v]) continue;
    settled[v] = true;
    order.push_back(v);
    for (const Edge& e : s.out_edges(v)) {
      const NodeIndex w = e.to;
      if (settled[w]) continue;
      const double candidate = dist[v] + 1.0 / static_cast<double>(e.weight);
      if (dist[w] == inf || (candidate < dist[w] && !same_length(candidate, dist[w]))) {
        dist[w] = candidate;
        sigma[w] = sigma[v];
        preds[w].assign(1, v);
        queue.emplace(candidate, w);
      } else if (same_length(candidate, dist[w])) {
        sigma[w] += sigma[v];
        preds[w].push_back(v);
      }
    }
  }

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeIndex w = *it;
    for (NodeIndex v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
    if (w != source) acc[w] += delta[w];
  }
}

}  // namespace

ScoreVector betweenness(const TimeSlice& s, bool normalized) {
  const std::size_t n = s.size();
  std::vector<double> acc(n, 0.0), dist(n), sigma(n), delta(n);
  std::vector<std::vector<NodeIndex>> preds(n);
  std::vector<NodeIndex> order;
  order.reserve(n);
  for (NodeIndex src = 0; src < n; ++src) {
    if (s.out_strength(src) == 0) continue;
    accumulate_from(s, src, acc, dist, sigma, delta, preds, order);
  }

  ScoreVector out(normalized ? "betweenness_normalized" : "betweenness", s.year(),
                  s.roster_ptr());
  double scale = 1.0;
  if (normalized) {
    const double active = static_cast<double>(active_nodes(s).size());
    scale = active >= 3 ? 1.0 / ((active - 1.0) * (active - 2.0)) : 0.0;
  }
  for (std::size_t i = 0; i < n; ++i) out.values[i] = acc[i] * scale;
  return out;
}

}  // namespace flownet
