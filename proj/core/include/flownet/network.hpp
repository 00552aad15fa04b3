#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flownet/country.hpp"
#include "flownet/errors.hpp"

namespace flownet {

using Weight = std::uint64_t;
using NodeIndex = std::uint32_t;
using Roster = std::vector<CountryCode>;
using RosterPtr = std::shared_ptr<const Roster>;

/// One (origin, destination, year, count) record. Validation happens at
/// ingestion, so an instance may violate the invariants until checked.
struct MigrationEvent {
  CountryCode origin;
  CountryCode destination;
  int year = 0;
  std::int64_t count = 0;

  auto operator<=>(const MigrationEvent&) const = default;
  bool operator==(const MigrationEvent&) const = default;
};

/// Inclusive year range [first, last].
struct YearRange {
  int first = 2000;
  int last = 2016;

  bool contains(int year) const noexcept { return year >= first && year <= last; }
  std::size_t size() const noexcept {
    return last < first ? 0 : static_cast<std::size_t>(last - first + 1);
  }
  bool operator==(const YearRange&) const = default;
};

struct Edge {
  NodeIndex from = 0;
  NodeIndex to = 0;
  Weight weight = 0;

  bool operator==(const Edge&) const = default;
};

/// One year of the network: weighted adjacency over a fixed roster, with
/// cached strengths. Immutable once constructed.
class TimeSlice {
 public:
  TimeSlice() = default;

  /// `edges` may come in any order but must hold distinct (from, to) pairs,
  /// from != to, weight >= 1 and indices within the roster.
  TimeSlice(int year, RosterPtr roster, std::vector<Edge> edges);

  int year() const noexcept { return year_; }
  std::size_t size() const noexcept { return roster_ ? roster_->size() : 0; }
  const Roster& roster() const noexcept;
  const RosterPtr& roster_ptr() const noexcept { return roster_; }
  const CountryCode& node(NodeIndex i) const { return roster().at(i); }
  std::optional<NodeIndex> index_of(const CountryCode& code) const;

  /// Edges sorted by (from, to).
  std::span<const Edge> edges() const noexcept { return by_source_; }
  std::span<const Edge> out_edges(NodeIndex i) const;
  /// In-edges of `i` sorted by source.
  std::span<const Edge> in_edges(NodeIndex i) const;

  /// Zero when the edge is absent.
  Weight weight(NodeIndex from, NodeIndex to) const;
  bool has_edge(NodeIndex from, NodeIndex to) const { return weight(from, to) > 0; }

  Weight in_strength(NodeIndex i) const { return in_strength_.at(i); }
  Weight out_strength(NodeIndex i) const { return out_strength_.at(i); }
  std::span<const Weight> in_strengths() const noexcept { return in_strength_; }
  std::span<const Weight> out_strengths() const noexcept { return out_strength_; }
  Weight total_weight() const noexcept { return total_; }

  /// Union of in- and out-neighbours, ascending.
  std::vector<NodeIndex> neighbors(NodeIndex i) const;

  friend bool operator==(const TimeSlice& a, const TimeSlice& b);

 private:
  int year_ = 0;
  RosterPtr roster_;
  std::vector<Edge> by_source_;
  std::vector<Edge> by_target_;
  std::vector<std::size_t> out_offsets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Weight> in_strength_;
  std::vector<Weight> out_strength_;
  Weight total_ = 0;
};

/// The full temporal network over a contiguous year domain.
class TemporalNetwork {
 public:
  TemporalNetwork() = default;
  TemporalNetwork(YearRange domain, RosterPtr roster, std::vector<std::vector<Edge>> per_year);

  const YearRange& domain() const noexcept { return domain_; }
  const Roster& nodes() const noexcept;
  const RosterPtr& roster_ptr() const noexcept { return roster_; }
  std::optional<NodeIndex> index_of(const CountryCode& code) const;

  /// w(origin, destination, year); zero when absent or out of domain.
  Weight weight(const CountryCode& origin, const CountryCode& destination, int year) const;

  /// Edges of one year sorted by (from, to). Throws DomainError outside the domain.
  std::span<const Edge> edges(int year) const;

  friend bool operator==(const TemporalNetwork& a, const TemporalNetwork& b);

 private:
  YearRange domain_;
  RosterPtr roster_;
  std::vector<std::vector<Edge>> per_year_;
};

struct BuildResult {
  TemporalNetwork network;
  std::size_t dropped_out_of_domain = 0;
  std::vector<RecordError> errors;
};

/// Aggregates duplicate quartets by summing counts and drops events outside
/// `domain`. Self-loops and non-positive counts become record errors.
/// `extra_roster` adds nodes that may never appear in an event.
BuildResult build_network(std::span<const MigrationEvent> events, YearRange domain,
                          std::span<const CountryCode> extra_roster = {});

/// Year-t slice over the full roster. Throws DomainError if t is outside the domain.
TimeSlice slice(const TemporalNetwork& net, int year);

std::vector<CountryCode> active_nodes(const TimeSlice& s);

/// Same edges, roster shrunk to the active nodes.
TimeSlice restrict_to_active(const TimeSlice& s);

/// Node count of the largest strongly connected component. Components
/// without an edge do not count, so an edgeless slice yields 0.
std::size_t largest_scc_size(const TimeSlice& s);

/// Strongly connected components (Tarjan), each sorted ascending. Every
/// node appears in exactly one component.
std::vector<std::vector<NodeIndex>> strongly_connected_components(const TimeSlice& s);

/// Keeps the roster but drops every edge not inside the largest SCC.
TimeSlice restrict_to_largest_scc(const TimeSlice& s);

inline std::size_t edge_count(const TimeSlice& s) { return s.edges().size(); }

struct ThresholdResult {
  TimeSlice slice;
  double retained_fraction = 1.0;
};

/// Keeps edges with weight >= tr (tr >= 1).
ThresholdResult threshold(const TimeSlice& s, Weight tr);

/// Same roster, every edge reversed.
TimeSlice reversed(const TimeSlice& s);

struct NamedEdge {
  std::string origin;
  std::string destination;
  Weight weight = 1;
};

/// Slice built from named edges over the sorted union of endpoints and
/// `extra`. Used by tests and tools.
TimeSlice make_slice(int year, const std::vector<NamedEdge>& edges,
                     const std::vector<std::string>& extra = {});

}  // namespace flownet
