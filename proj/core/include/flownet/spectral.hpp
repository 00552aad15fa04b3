#pragma once

#include <cstddef>
#include <optional>

#include "flownet/network.hpp"
#include "flownet/score.hpp"

namespace flownet {

struct IterationReport {
  std::size_t iterations = 0;
  double final_delta = 0.0;  // L1 change at the last step
  bool converged = false;
};

struct PageRankOptions {
  double damping = 0.85;
  double tolerance = 1e-10;
  std::size_t max_iterations = 1000;
};

struct PageRankResult {
  ScoreVector scores;
  IterationReport report;
};

/// Weighted PageRank by power iteration from the uniform vector. Row i of the
/// transition matrix is d * w_ij / s_out(i) + (1 - d) / |V|, or uniform when
/// s_out(i) = 0. Stops when the L1 change is <= tolerance.
/// Throws std::invalid_argument for an empty roster or d outside (0, 1).
PageRankResult pagerank(const TimeSlice& s, const PageRankOptions& options = {});

struct HitsOptions {
  bool weighted = true;
  double tolerance = 1e-10;
  std::size_t max_iterations = 1000;
};

struct HitsResult {
  ScoreVector hub;
  ScoreVector authority;
  IterationReport report;
};

/// Hub/authority iteration with sum-to-one normalization:
///   a(x+1) ∝ Wᵀ h(x),   h(x+1) ∝ W a(x+1),
/// from h(0) = a(0) = 1/|V|. Stops when the larger of the two L1 changes is
/// <= tolerance. Unweighted mode uses the 0/1 adjacency.
/// Returns nullopt for an edgeless slice, where neither vector has support.
std::optional<HitsResult> hits(const TimeSlice& s, const HitsOptions& options = {});

}  // namespace flownet
