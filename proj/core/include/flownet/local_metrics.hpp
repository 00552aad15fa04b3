#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "flownet/network.hpp"
#include "flownet/score.hpp"

namespace flownet {

enum class Side { out, in };

/// `paper` is 2·|reciprocated neighbours| / |N_i| and can reach 2;
/// `normalized` halves it into [0, 1].
enum class ReciprocityVariant { paper, normalized };

/// (s_out - s_in) / (s_out + s_in); nullopt when both strengths are zero.
std::optional<double> drain_index(Weight out_strength, Weight in_strength);
std::optional<double> drain_index(const TimeSlice& s, NodeIndex i);
ScoreVector drain_index_scores(const TimeSlice& s);

/// Unweighted directed clustering over the union neighbourhood N_i:
/// ordered neighbour pairs (j, k) with an edge j->k, over |N_i|(|N_i|-1).
/// nullopt when |N_i| < 2.
std::optional<double> clustering_coefficient(const TimeSlice& s, NodeIndex i);
ScoreVector clustering_scores(const TimeSlice& s);

/// nullopt for an isolated node.
std::optional<double> node_reciprocity(const TimeSlice& s, NodeIndex i,
                                       ReciprocityVariant variant = ReciprocityVariant::paper);
ScoreVector node_reciprocity_scores(const TimeSlice& s,
                                    ReciprocityVariant variant = ReciprocityVariant::paper);

/// Fraction of edges whose reverse exists; nullopt for an edgeless slice.
std::optional<double> network_reciprocity(const TimeSlice& s);

/// Mean absolute difference over all ordered pairs divided by twice the mean.
/// nullopt for an empty or all-zero population.
std::optional<double> gini(std::span<const double> population);

struct LorenzCurve {
  std::vector<std::pair<double, double>> points;  // (population share, weight share)
  double gini = 0.0;
};

/// Points k/n against the share held by the k smallest values, from (0,0)
/// to (1,1). nullopt under the same conditions as gini().
std::optional<LorenzCurve> lorenz(std::span<const double> population);

/// Weights of i's outgoing (Side::out) or incoming (Side::in) edges.
std::vector<double> neighbor_weight_population(const TimeSlice& s, NodeIndex i, Side side);

}  // namespace flownet
