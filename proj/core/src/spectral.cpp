#include "flownet/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace flownet {

namespace {

double l1_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

void normalize_l1(std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  if (sum > 0.0) {
    for (double& x : v) x /= sum;
  }
}

ScoreVector to_scores(const TimeSlice& s, const char* name, const std::vector<double>& v) {
  ScoreVector out(name, s.year(), s.roster_ptr());
  for (std::size_t i = 0; i < v.size(); ++i) out.values[i] = v[i];
  return out;
}

}  // namespace

PageRankResult pagerank(const TimeSlice& s, const PageRankOptions& options) {
  const std::size_t n = s.size();
  if (n == 0) throw std::invalid_argument("pagerank on an empty roster");
  if (!(options.damping > 0.0 && options.damping < 1.0)) {
    throw std::invalid_argument("damping must lie in (0, 1)");
  }
  const double d = options.damping;
  const double uniform = 1.0 / static_cast<double>(n);

  std::vector<double> rank(n, uniform), next(n);
  IterationReport report;
  while (report.iterations < options.max_iterations) {
    // Mass from teleport and dangling rows is spread uniformly.
    double spread = 0.0;
    for (NodeIndex i = 0; i < n; ++i) {
      spread += s.out_strength(i) > 0 ? (1.0 - d) * rank[i] : rank[i];
    }
    std::fill(next.begin(), next.end(), spread * uniform);
    for (NodeIndex i = 0; i < n; ++i) {
      const Weight out = s.out_strength(i);
      if (out == 0) continue;
      const double share = d * rank[i] / static_cast<double>(out);
      for (const Edge& e : s.out_edges(i)) next[e.to] += share * static_cast<double>(e.weight);
    }
    // Re-normalize to absorb rounding drift; R is row-stochastic.
    normalize_l1(next);
    ++report.iterations;
    report.final_delta = l1_distance(next, rank);
    rank.swap(next);
    if (report.final_delta <= options.tolerance) {
      report.converged = true;
      break;
    }
  }
  return {to_scores(s, "pagerank", rank), report};
}

std::optional<HitsResult> hits(const TimeSlice& s, const HitsOptions& options) {
  if (edge_count(s) == 0) return std::nullopt;
  const std::size_t n = s.size();
  const double uniform = 1.0 / static_cast<double>(n);
  auto w = [&](const Edge& e) { return options.weighted ? static_cast<double>(e.weight) : 1.0; };

  std::vector<double> hub(n, uniform), auth(n, uniform), next_hub(n), next_auth(n);
  IterationReport report;
  while (report.iterations < options.max_iterations) {
    for (NodeIndex i = 0; i < n; ++i) {
      double sum = 0.0;
      for (const Edge& e : s.in_edges(i)) sum += w(e) * hub[e.from];
      next_auth[i] = sum;
    }
    normalize_l1(next_auth);
    for (NodeIndex i = 0; i < n; ++i) {
      double sum = 0.0;
      for (const Edge& e : s.out_edges(i)) sum += w(e) * next_auth[e.to];
      next_hub[i] = sum;
    }
    normalize_l1(next_hub);
    ++report.iterations;
    report.final_delta = std::max(l1_distance(next_auth, auth), l1_distance(next_hub, hub));
    auth.swap(next_auth);
    hub.swap(next_hub);
    if (report.final_delta <= options.tolerance) {
      report.converged = true;
      break;
    }
  }
  const char* hub_name = options.weighted ? "hub" : "hub_unweighted";
  const char* auth_name = options.weighted ? "authority" : "authority_unweighted";
  return HitsResult{to_scores(s, hub_name, hub), to_scores(s, auth_name, auth), report};
}

}  // namespace flownet
