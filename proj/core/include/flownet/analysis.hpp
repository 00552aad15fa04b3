#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "flownet/local_metrics.hpp"
#include "flownet/network.hpp"
#include "flownet/null_model.hpp"
#include "flownet/score.hpp"
#include "flownet/spectral.hpp"

namespace flownet {

enum class Direction { descending, ascending };
enum class HitsRole { hub, authority };

struct RankEntry {
  std::size_t rank = 0;  // 1-based
  CountryCode node;
  double score = 0.0;
};

struct Ranking {
  int year = 0;
  std::string metric;
  std::string tiebreak;  // "code", or "<vector name> desc, code"
  std::vector<RankEntry> entries;
  std::vector<CountryCode> undefined;  // nodes left out for lack of a score
};

/// Orders defined scores in `direction`; equal scores fall back to the
/// tie-break vector (larger first, undefined last) and then to the code.
Ranking rank(const ScoreVector& v, Direction direction = Direction::descending,
             const ScoreVector* tiebreak = nullptr);

/// Sample Pearson r over nodes defined in both vectors. nullopt with fewer
/// than three common values or zero variance on either side.
std::optional<double> pearson(const ScoreVector& x, const ScoreVector& y);

/// Two-sided p-value of r under the t-distribution with n - 2 degrees of freedom.
double pearson_p_value(double r, std::size_t n);

/// Per-position statistic across a sample (years, realizations, members).
struct RankConditionedCurve {
  std::string metric;
  std::string source;  // "network" or "null"
  std::vector<std::optional<double>> mean;
  std::vector<double> ci95;
  std::vector<std::size_t> samples;

  std::size_t size() const noexcept { return mean.size(); }
};

/// Per-year HITS options plus the roster policy applied before computing.
struct AnalysisOptions {
  HitsOptions hits;
  bool per_year_roster = false;  // shrink each slice to its active nodes
  bool restrict_to_scc = false;  // HITS on the largest SCC only
  ReciprocityVariant reciprocity = ReciprocityVariant::paper;
};

/// Slice of `year` with the roster policy of `options` applied.
TimeSlice prepare_slice(const TemporalNetwork& net, int year, const AnalysisOptions& options);

/// HITS on `s`, or on its largest SCC when `options.restrict_to_scc` is set.
std::optional<HitsResult> run_hits(const TimeSlice& s, const AnalysisOptions& options);

/// Nodes of one slice in hub or authority order (descending, ties by code).
/// Empty for an edgeless slice.
std::vector<NodeIndex> hits_order(const TimeSlice& s, HitsRole role,
                                  const AnalysisOptions& options = {});

/// For one slice: value at each rank position of the HITS ordering.
std::vector<std::optional<double>> gini_by_rank(const TimeSlice& s, HitsRole role, Side side,
                                                const AnalysisOptions& options = {});
std::vector<std::optional<double>> neighbor_cc_by_rank(const TimeSlice& s, HitsRole role,
                                                       const AnalysisOptions& options = {});

/// Folds per-sample rows (one per year or realization) into a curve, aligned
/// by rank position. A position seen once gets a zero half-width.
RankConditionedCurve aggregate_by_position(std::string metric, std::string source,
                                           const std::vector<std::vector<std::optional<double>>>& rows);

/// Gini of the ranked node's side-weight population, averaged per rank
/// position over the years of the network.
RankConditionedCurve rank_conditioned_gini(const TemporalNetwork& net, HitsRole role, Side side,
                                           const AnalysisOptions& options = {});

/// Mean clustering of successors (hub) or predecessors (authority) of the
/// ranked node, averaged per rank position over the years.
RankConditionedCurve rank_conditioned_neighbor_cc(const TemporalNetwork& net, HitsRole role,
                                                  const AnalysisOptions& options = {});

struct RankRange {
  std::size_t first = 1;  // 1-based, inclusive
  std::size_t last = 10;  // inclusive; SIZE_MAX = end of ranking
};

std::vector<RankRange> default_lorenz_classes();

struct LorenzClass {
  RankRange range;
  std::size_t members = 0;
  std::vector<double> grid;       // population shares, 101 points
  std::vector<double> mean;       // mean weight share per grid point
  std::vector<double> ci95;       // 1.96 * SE per grid point
  double mean_gini = 0.0;
};

struct LorenzClassesResult {
  std::vector<LorenzClass> classes;
  std::vector<std::string> warnings;  // one per omitted class
};

/// Linear interpolation of a Lorenz curve at population share x.
double lorenz_at(const LorenzCurve& curve, double x);

LorenzClassesResult lorenz_by_class(const TemporalNetwork& net, int year, HitsRole role, Side side,
                                    const std::vector<RankRange>& classes,
                                    const AnalysisOptions& options = {});

struct ReciprocityPoint {
  int year = 0;
  std::optional<double> network;
  std::optional<double> top_k_mean;
};

struct ReciprocitySeries {
  HitsRole role = HitsRole::hub;
  std::size_t top_k = 10;
  ReciprocityVariant variant = ReciprocityVariant::paper;
  std::vector<ReciprocityPoint> points;
};

ReciprocitySeries reciprocity_timeseries(const TemporalNetwork& net, std::size_t top_k,
                                         HitsRole role, const AnalysisOptions& options = {});

struct TrajectoryPoint {
  int year = 0;
  double betweenness = 0.0;
  double clustering = 0.0;
};

struct Trajectory {
  CountryCode country;
  std::vector<TrajectoryPoint> points;
  std::vector<int> skipped_years;  // inactive or clustering undefined
};

/// Throws DomainError listing any code not in the roster.
std::vector<Trajectory> trajectories(const TemporalNetwork& net,
                                     const std::vector<CountryCode>& countries);

using MetricFn = std::function<ScoreVector(const TimeSlice&)>;

struct ThresholdRanking {
  Weight threshold = 1;
  double retained_fraction = 1.0;
  Ranking ranking;
};

/// Thresholds the year slice at each tr, recomputes `metric` and ranks it.
/// `tiebreak`, when set, supplies the tie-break vector for each thresholded slice.
std::vector<ThresholdRanking> threshold_sensitivity(const TemporalNetwork& net, int year,
                                                    const MetricFn& metric,
                                                    const std::vector<Weight>& thresholds,
                                                    Direction direction = Direction::descending,
                                                    const MetricFn& tiebreak = {});

/// Spearman rank correlation (average ranks for ties); nullopt when undefined.
std::optional<double> spearman(const std::vector<double>& x, const std::vector<double>& y);

const char* to_string(HitsRole role);
const char* to_string(Side side);
const char* to_string(ReciprocityVariant variant);

}  // namespace flownet
