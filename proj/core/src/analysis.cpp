#include "flownet/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/special_functions/beta.hpp>

#include "flownet/betweenness.hpp"

namespace flownet {

// --- ranking and correlation ------------------------------------------------

Ranking rank(const ScoreVector& v, Direction direction, const ScoreVector* tiebreak) {
  Ranking out;
  out.year = v.year;
  out.metric = v.name;
  out.tiebreak = tiebreak ? tiebreak->name + " desc, code" : "code";

  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.values[i]) {
      idx.push_back(i);
    } else {
      out.undefined.push_back(v.node(i));
    }
  }
  auto tie = [&](std::size_t i) -> std::optional<double> {
    if (!tiebreak) return std::nullopt;
    return tiebreak->at(v.node(i));
  };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const double sa = *v.values[a], sb = *v.values[b];
    if (sa != sb) return direction == Direction::descending ? sa > sb : sa < sb;
    const auto ta = tie(a), tb = tie(b);
    if (ta != tb) {
      if (!tb) return true;
      if (!ta) return false;
      return *ta > *tb;
    }
    return v.node(a) < v.node(b);
  });
  out.entries.reserve(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    out.entries.push_back({k + 1, v.node(idx[k]), *v.values[idx[k]]});
  }
  return out;
}

namespace {

std::optional<double> pearson_raw(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() < 3) return std::nullopt;
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace

std::optional<double> pearson(const ScoreVector& x, const ScoreVector& y) {
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x.values[i]) continue;
    auto other = y.at(x.node(i));
    if (!other) continue;
    xs.push_back(*x.values[i]);
    ys.push_back(*other);
  }
  return pearson_raw(xs, ys);
}

double pearson_p_value(double r, std::size_t n) {
  if (n < 3) return 1.0;
  if (std::abs(r) >= 1.0) return 0.0;
  const double dof = static_cast<double>(n) - 2.0;
  const double t2 = r * r * dof / (1.0 - r * r);
  // P(|T| > t) = I_{dof/(dof+t^2)}(dof/2, 1/2)
  return boost::math::ibeta(dof / 2.0, 0.5, dof / (dof + t2));
}

std::optional<double> spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) return std::nullopt;
  auto ranks = [](const std::vector<double>& v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < idx.size();) {
      std::size_t j = i;
      while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
      const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
      for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
      i = j + 1;
    }
    return r;
  };
  return pearson_raw(ranks(x), ranks(y));
}

// --- per-slice building blocks ------------------------------------------------

TimeSlice prepare_slice(const TemporalNetwork& net, int year, const AnalysisOptions& options) {
  TimeSlice s = slice(net, year);
  return options.per_year_roster ? restrict_to_active(s) : s;
}

std::optional<HitsResult> run_hits(const TimeSlice& s, const AnalysisOptions& options) {
  return options.restrict_to_scc ? hits(restrict_to_largest_scc(s), options.hits)
                                 : hits(s, options.hits);
}

std::vector<NodeIndex> hits_order(const TimeSlice& s, HitsRole role,
                                  const AnalysisOptions& options) {
  auto result = run_hits(s, options);
  if (!result) return {};
  const ScoreVector& scores = role == HitsRole::hub ? result->hub : result->authority;
  const Ranking r = rank(scores);
  std::vector<NodeIndex> order;
  order.reserve(r.entries.size());
  for (const auto& e : r.entries) order.push_back(*s.index_of(e.node));
  return order;
}

std::vector<std::optional<double>> gini_by_rank(const TimeSlice& s, HitsRole role, Side side,
                                                const AnalysisOptions& options) {
  std::vector<std::optional<double>> row;
  for (NodeIndex i : hits_order(s, role, options)) {
    const auto population = neighbor_weight_population(s, i, side);
    row.push_back(gini(population));
  }
  return row;
}

std::vector<std::optional<double>> neighbor_cc_by_rank(const TimeSlice& s, HitsRole role,
                                                       const AnalysisOptions& options) {
  const auto order = hits_order(s, role, options);
  if (order.empty()) return {};
  const ScoreVector cc = clustering_scores(s);
  std::vector<std::optional<double>> row;
  row.reserve(order.size());
  for (NodeIndex i : order) {
    const auto edges = role == HitsRole::hub ? s.out_edges(i) : s.in_edges(i);
    double sum = 0.0;
    std::size_t defined = 0;
    for (const Edge& e : edges) {
      const NodeIndex member = role == HitsRole::hub ? e.to : e.from;
      if (auto c = cc.values[member]) {
        sum += *c;
        ++defined;
      }
    }
    row.push_back(defined ? std::optional<double>(sum / static_cast<double>(defined))
                          : std::nullopt);
  }
  return row;
}

RankConditionedCurve aggregate_by_position(
    std::string metric, std::string source,
    const std::vector<std::vector<std::optional<double>>>& rows) {
  RankConditionedCurve curve;
  curve.metric = std::move(metric);
  curve.source = std::move(source);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.size());
  for (std::size_t k = 0; k < width; ++k) {
    std::vector<double> sample;
    for (const auto& r : rows) {
      if (k < r.size() && r[k]) sample.push_back(*r[k]);
    }
    const SampleSummary s = summarize(sample);
    curve.mean.push_back(s.mean);
    curve.ci95.push_back(s.ci95.value_or(0.0));
    curve.samples.push_back(s.count);
  }
  return curve;
}

// --- temporal analyses -------------------------------------------------------

RankConditionedCurve rank_conditioned_gini(const TemporalNetwork& net, HitsRole role, Side side,
                                           const AnalysisOptions& options) {
  std::vector<std::vector<std::optional<double>>> rows;
  for (int t = net.domain().first; t <= net.domain().last; ++t) {
    rows.push_back(gini_by_rank(prepare_slice(net, t, options), role, side, options));
  }
  return aggregate_by_position(std::string("gini_") + to_string(role) + "_" + to_string(side),
                               "network", rows);
}

RankConditionedCurve rank_conditioned_neighbor_cc(const TemporalNetwork& net, HitsRole role,
                                                  const AnalysisOptions& options) {
  std::vector<std::vector<std::optional<double>>> rows;
  for (int t = net.domain().first; t <= net.domain().last; ++t) {
    rows.push_back(neighbor_cc_by_rank(prepare_slice(net, t, options), role, options));
  }
  return aggregate_by_position(std::string("neighbor_cc_") + to_string(role), "network", rows);
}

std::vector<RankRange> default_lorenz_classes() {
  return {{1, 10}, {11, 50}, {51, std::numeric_limits<std::size_t>::max()}};
}

double lorenz_at(const LorenzCurve& curve, double x) {
  const auto& p = curve.points;
  if (x <= p.front().first) return p.front().second;
  if (x >= p.back().first) return p.back().second;
  auto it = std::upper_bound(p.begin(), p.end(), x,
                             [](double v, const auto& pt) { return v < pt.first; });
  const auto [x1, y1] = *it;
  const auto [x0, y0] = *(it - 1);
  if (x1 == x0) return y1;
  return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

LorenzClassesResult lorenz_by_class(const TemporalNetwork& net, int year, HitsRole role, Side side,
                                    const std::vector<RankRange>& classes,
                                    const AnalysisOptions& options) {
  constexpr std::size_t grid_points = 101;
  const TimeSlice s = prepare_slice(net, year, options);
  const auto order = hits_order(s, role, options);

  LorenzClassesResult result;
  for (const RankRange& range : classes) {
    std::vector<LorenzCurve> curves;
    for (std::size_t pos = range.first; pos <= range.last && pos <= order.size(); ++pos) {
      if (pos == 0) continue;
      const auto population = neighbor_weight_population(s, order[pos - 1], side);
      if (auto c = lorenz(population)) curves.push_back(std::move(*c));
    }
    const std::string label =
        std::to_string(range.first) + "-" +
        (range.last == std::numeric_limits<std::size_t>::max() ? std::string("end")
                                                                : std::to_string(range.last));
    if (curves.empty()) {
      result.warnings.push_back("class " + label + " has no members with a defined Lorenz curve");
      continue;
    }
    LorenzClass cls;
    cls.range = range;
    cls.members = curves.size();
    std::vector<double> ginis;
    for (const auto& c : curves) ginis.push_back(c.gini);
    cls.mean_gini = *summarize(ginis).mean;
    for (std::size_t g = 0; g < grid_points; ++g) {
      const double x = static_cast<double>(g) / static_cast<double>(grid_points - 1);
      std::vector<double> ys;
      ys.reserve(curves.size());
      for (const auto& c : curves) ys.push_back(lorenz_at(c, x));
      const SampleSummary summary = summarize(ys);
      cls.grid.push_back(x);
      cls.mean.push_back(*summary.mean);
      cls.ci95.push_back(summary.ci95.value_or(0.0));
    }
    result.classes.push_back(std::move(cls));
  }
  return result;
}

ReciprocitySeries reciprocity_timeseries(const TemporalNetwork& net, std::size_t top_k,
                                         HitsRole role, const AnalysisOptions& options) {
  if (top_k < 1) throw std::invalid_argument("top_k must be >= 1");
  ReciprocitySeries series;
  series.role = role;
  series.top_k = top_k;
  series.variant = options.reciprocity;
  for (int t = net.domain().first; t <= net.domain().last; ++t) {
    const TimeSlice s = prepare_slice(net, t, options);
    ReciprocityPoint point;
    point.year = t;
    point.network = network_reciprocity(s);
    const auto order = hits_order(s, role, options);
    std::vector<double> values;
    for (std::size_t k = 0; k < order.size() && k < top_k; ++k) {
      if (auto r = node_reciprocity(s, order[k], options.reciprocity)) values.push_back(*r);
    }
    point.top_k_mean = summarize(values).mean;
    series.points.push_back(point);
  }
  return series;
}

std::vector<Trajectory> trajectories(const TemporalNetwork& net,
                                     const std::vector<CountryCode>& countries) {
  std::vector<NodeIndex> indices;
  std::string unknown;
  for (const auto& c : countries) {
    if (auto i = net.index_of(c)) {
      indices.push_back(*i);
    } else {
      unknown += (unknown.empty() ? "" : ",") + c.str();
    }
  }
  if (!unknown.empty()) throw DomainError("unknown countries: " + unknown);

  std::vector<Trajectory> out(countries.size());
  for (std::size_t k = 0; k < countries.size(); ++k) out[k].country = countries[k];
  for (int t = net.domain().first; t <= net.domain().last; ++t) {
    const TimeSlice s = slice(net, t);
    const ScoreVector cb = betweenness(s);
    for (std::size_t k = 0; k < indices.size(); ++k) {
      const NodeIndex i = indices[k];
      const bool active = s.in_strength(i) > 0 || s.out_strength(i) > 0;
      const auto cc = clustering_coefficient(s, i);
      if (!active || !cc || !cb.values[i]) {
        out[k].skipped_years.push_back(t);
        continue;
      }
      out[k].points.push_back({t, *cb.values[i], *cc});
    }
  }
  return out;
}

std::vector<ThresholdRanking> threshold_sensitivity(const TemporalNetwork& net, int year,
                                                    const MetricFn& metric,
                                                    const std::vector<Weight>& thresholds,
                                                    Direction direction,
                                                    const MetricFn& tiebreak) {
  const TimeSlice base = slice(net, year);
  std::vector<ThresholdRanking> out;
  for (Weight tr : thresholds) {
    ThresholdResult cut = threshold(base, tr);
    const ScoreVector scores = metric(cut.slice);
    std::optional<ScoreVector> tie;
    if (tiebreak) tie = tiebreak(cut.slice);
    out.push_back({tr, cut.retained_fraction, rank(scores, direction, tie ? &*tie : nullptr)});
  }
  return out;
}

const char* to_string(HitsRole role) { return role == HitsRole::hub ? "hub" : "authority"; }
const char* to_string(Side side) { return side == Side::out ? "out" : "in"; }
const char* to_string(ReciprocityVariant variant) {
  return variant == ReciprocityVariant::paper ? "paper" : "normalized";
}

}  // namespace flownet
