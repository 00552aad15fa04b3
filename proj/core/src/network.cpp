#include "flownet/network.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace flownet {

namespace {

const Roster& empty_roster() {
  static const Roster empty;
  return empty;
}

std::optional<NodeIndex> find_in_roster(const Roster& roster, const CountryCode& code) {
  auto it = std::lower_bound(roster.begin(), roster.end(), code);
  if (it == roster.end() || *it != code) return std::nullopt;
  return static_cast<NodeIndex>(it - roster.begin());
}

bool by_source_less(const Edge& a, const Edge& b) {
  return std::tie(a.from, a.to) < std::tie(b.from, b.to);
}

bool by_target_less(const Edge& a, const Edge& b) {
  return std::tie(a.to, a.from) < std::tie(b.to, b.from);
}

std::vector<std::size_t> offsets(std::span<const Edge> sorted, std::size_t n, bool by_from) {
  std::vector<std::size_t> off(n + 1, 0);
  for (const Edge& e : sorted) ++off[(by_from ? e.from : e.to) + 1];
  for (std::size_t i = 0; i < n; ++i) off[i + 1] += off[i];
  return off;
}

}  // namespace

// --- TimeSlice ------------------------------------------------------------

TimeSlice::TimeSlice(int year, RosterPtr roster, std::vector<Edge> edges)
    : year_(year), roster_(std::move(roster)), by_source_(std::move(edges)) {
  if (!roster_) roster_ = std::make_shared<const Roster>();
  const std::size_t n = roster_->size();
  std::sort(by_source_.begin(), by_source_.end(), by_source_less);
  for (std::size_t k = 0; k < by_source_.size(); ++k) {
    const Edge& e = by_source_[k];
    if (e.from >= n || e.to >= n) throw std::invalid_argument("edge endpoint outside roster");
    if (e.from == e.to) throw std::invalid_argument("self-loop edge");
    if (e.weight == 0) throw std::invalid_argument("zero-weight edge");
    if (k > 0 && by_source_[k - 1].from == e.from && by_source_[k - 1].to == e.to) {
      throw std::invalid_argument("duplicate edge");
    }
  }
  by_target_ = by_source_;
  std::sort(by_target_.begin(), by_target_.end(), by_target_less);
  out_offsets_ = offsets(by_source_, n, true);
  in_offsets_ = offsets(by_target_, n, false);

  in_strength_.assign(n, 0);
  out_strength_.assign(n, 0);
  for (const Edge& e : by_source_) {
    out_strength_[e.from] += e.weight;
    in_strength_[e.to] += e.weight;
    total_ += e.weight;
  }
}

const Roster& TimeSlice::roster() const noexcept {
  return roster_ ? *roster_ : empty_roster();
}

std::optional<NodeIndex> TimeSlice::index_of(const CountryCode& code) const {
  return find_in_roster(roster(), code);
}

std::span<const Edge> TimeSlice::out_edges(NodeIndex i) const {
  if (i >= size()) throw DomainError("node index outside roster");
  return std::span<const Edge>(by_source_).subspan(out_offsets_[i],
                                                   out_offsets_[i + 1] - out_offsets_[i]);
}

std::span<const Edge> TimeSlice::in_edges(NodeIndex i) const {
  if (i >= size()) throw DomainError("node index outside roster");
  return std::span<const Edge>(by_target_).subspan(in_offsets_[i],
                                                   in_offsets_[i + 1] - in_offsets_[i]);
}

Weight TimeSlice::weight(NodeIndex from, NodeIndex to) const {
  auto out = out_edges(from);
  auto it = std::lower_bound(out.begin(), out.end(), to,
                             [](const Edge& e, NodeIndex t) { return e.to < t; });
  return (it != out.end() && it->to == to) ? it->weight : 0;
}

std::vector<NodeIndex> TimeSlice::neighbors(NodeIndex i) const {
  std::vector<NodeIndex> result;
  auto out = out_edges(i);
  auto in = in_edges(i);
  result.reserve(out.size() + in.size());
  auto a = out.begin();
  auto b = in.begin();
  while (a != out.end() || b != in.end()) {
    if (b == in.end() || (a != out.end() && a->to < b->from)) {
      result.push_back((a++)->to);
    } else if (a == out.end() || b->from < a->to) {
      result.push_back((b++)->from);
    } else {
      result.push_back(a->to);
      ++a;
      ++b;
    }
  }
  return result;
}

bool operator==(const TimeSlice& a, const TimeSlice& b) {
  return a.year_ == b.year_ && a.roster() == b.roster() && a.by_source_ == b.by_source_ &&
         a.in_strength_ == b.in_strength_ && a.out_strength_ == b.out_strength_ &&
         a.total_ == b.total_;
}

// --- TemporalNetwork -------------------------------------------------------

TemporalNetwork::TemporalNetwork(YearRange domain, RosterPtr roster,
                                 std::vector<std::vector<Edge>> per_year)
    : domain_(domain), roster_(std::move(roster)), per_year_(std::move(per_year)) {
  if (domain_.size() == 0) throw std::invalid_argument("empty time domain");
  if (!roster_) roster_ = std::make_shared<const Roster>();
  per_year_.resize(domain_.size());
  for (auto& edges : per_year_) std::sort(edges.begin(), edges.end(), by_source_less);
}

const Roster& TemporalNetwork::nodes() const noexcept {
  return roster_ ? *roster_ : empty_roster();
}

std::optional<NodeIndex> TemporalNetwork::index_of(const CountryCode& code) const {
  return find_in_roster(nodes(), code);
}

Weight TemporalNetwork::weight(const CountryCode& origin, const CountryCode& destination,
                               int year) const {
  if (!domain_.contains(year)) return 0;
  auto o = index_of(origin);
  auto d = index_of(destination);
  if (!o || !d) return 0;
  const auto& edges = per_year_[static_cast<std::size_t>(year - domain_.first)];
  Edge key{*o, *d, 0};
  auto it = std::lower_bound(edges.begin(), edges.end(), key, by_source_less);
  return (it != edges.end() && it->from == *o && it->to == *d) ? it->weight : 0;
}

std::span<const Edge> TemporalNetwork::edges(int year) const {
  if (!domain_.contains(year)) {
    throw DomainError("year " + std::to_string(year) + " outside time domain [" +
                      std::to_string(domain_.first) + ".." + std::to_string(domain_.last) + "]");
  }
  return per_year_[static_cast<std::size_t>(year - domain_.first)];
}

bool operator==(const TemporalNetwork& a, const TemporalNetwork& b) {
  return a.domain_ == b.domain_ && a.nodes() == b.nodes() && a.per_year_ == b.per_year_;
}

// --- operations ------------------------------------------------------------

BuildResult build_network(std::span<const MigrationEvent> events, YearRange domain,
                          std::span<const CountryCode> extra_roster) {
  if (domain.size() == 0) throw std::invalid_argument("empty time domain");
  BuildResult result;
  std::map<std::tuple<int, CountryCode, CountryCode>, Weight> aggregated;
  std::set<CountryCode> nodes(extra_roster.begin(), extra_roster.end());

  for (std::size_t k = 0; k < events.size(); ++k) {
    const MigrationEvent& ev = events[k];
    if (ev.origin == ev.destination) {
      result.errors.push_back({0, "event " + std::to_string(k + 1) + ": self-loop " +
                                      ev.origin.str() + "->" + ev.destination.str()});
      continue;
    }
    if (ev.count <= 0) {
      result.errors.push_back(
          {0, "event " + std::to_string(k + 1) + ": non-positive count " + std::to_string(ev.count)});
      continue;
    }
    if (!domain.contains(ev.year)) {
      ++result.dropped_out_of_domain;
      continue;
    }
    aggregated[{ev.year, ev.origin, ev.destination}] += static_cast<Weight>(ev.count);
    nodes.insert(ev.origin);
    nodes.insert(ev.destination);
  }

  auto roster = std::make_shared<const Roster>(nodes.begin(), nodes.end());
  std::vector<std::vector<Edge>> per_year(domain.size());
  for (const auto& [key, w] : aggregated) {
    const auto& [year, origin, destination] = key;
    per_year[static_cast<std::size_t>(year - domain.first)].push_back(
        {*find_in_roster(*roster, origin), *find_in_roster(*roster, destination), w});
  }
  result.network = TemporalNetwork(domain, std::move(roster), std::move(per_year));
  return result;
}

TimeSlice slice(const TemporalNetwork& net, int year) {
  auto edges = net.edges(year);
  return TimeSlice(year, net.roster_ptr(), std::vector<Edge>(edges.begin(), edges.end()));
}

std::vector<CountryCode> active_nodes(const TimeSlice& s) {
  std::vector<CountryCode> result;
  for (NodeIndex i = 0; i < s.size(); ++i) {
    if (s.in_strength(i) > 0 || s.out_strength(i) > 0) result.push_back(s.node(i));
  }
  return result;
}

TimeSlice restrict_to_active(const TimeSlice& s) {
  std::vector<NodeIndex> remap(s.size(), 0);
  auto roster = std::make_shared<Roster>();
  for (NodeIndex i = 0; i < s.size(); ++i) {
    if (s.in_strength(i) > 0 || s.out_strength(i) > 0) {
      remap[i] = static_cast<NodeIndex>(roster->size());
      roster->push_back(s.node(i));
    }
  }
  std::vector<Edge> edges;
  edges.reserve(s.edges().size());
  for (const Edge& e : s.edges()) edges.push_back({remap[e.from], remap[e.to], e.weight});
  return TimeSlice(s.year(), std::move(roster), std::move(edges));
}

std::vector<std::vector<NodeIndex>> strongly_connected_components(const TimeSlice& s) {
  // Iterative Tarjan; recursion depth would otherwise follow path length.
  const std::size_t n = s.size();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<NodeIndex> stack;
  std::vector<std::pair<NodeIndex, std::size_t>> call;  // (node, next out-edge position)
  std::vector<std::vector<NodeIndex>> components;
  std::size_t counter = 0;

  for (NodeIndex root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.emplace_back(root, 0);
    index[root] = lowlink[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      auto& [v, pos] = call.back();
      auto out = s.out_edges(v);
      if (pos < out.size()) {
        NodeIndex w = out[pos++].to;
        if (index[w] == unvisited) {
          index[w] = lowlink[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
        continue;
      }
      NodeIndex done = v;
      call.pop_back();
      if (!call.empty()) {
        NodeIndex parent = call.back().first;
        lowlink[parent] = std::min(lowlink[parent], lowlink[done]);
      }
      if (lowlink[done] == index[done]) {
        std::vector<NodeIndex> component;
        NodeIndex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != done);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }
  return components;
}

std::size_t largest_scc_size(const TimeSlice& s) {
  std::size_t best = 0;
  for (const auto& c : strongly_connected_components(s)) {
    // a singleton never contains an edge (no self-loops)
    if (c.size() >= 2) best = std::max(best, c.size());
  }
  if (best == 0 && edge_count(s) > 0) best = 1;
  return best;
}

TimeSlice restrict_to_largest_scc(const TimeSlice& s) {
  auto components = strongly_connected_components(s);
  const std::vector<NodeIndex>* largest = nullptr;
  for (const auto& c : components) {
    // ties go to the component holding the smallest node index
    if (!largest || c.size() > largest->size() ||
        (c.size() == largest->size() && c.front() < largest->front())) {
      largest = &c;
    }
  }
  std::vector<bool> member(s.size(), false);
  if (largest && largest->size() >= 2) {
    for (NodeIndex i : *largest) member[i] = true;
  }
  std::vector<Edge> edges;
  for (const Edge& e : s.edges()) {
    if (member[e.from] && member[e.to]) edges.push_back(e);
  }
  return TimeSlice(s.year(), s.roster_ptr(), std::move(edges));
}

ThresholdResult threshold(const TimeSlice& s, Weight tr) {
  if (tr < 1) throw std::invalid_argument("threshold must be >= 1");
  std::vector<Edge> kept;
  for (const Edge& e : s.edges()) {
    if (e.weight >= tr) kept.push_back(e);
  }
  const double before = static_cast<double>(s.edges().size());
  const double fraction = before == 0 ? 1.0 : static_cast<double>(kept.size()) / before;
  return {TimeSlice(s.year(), s.roster_ptr(), std::move(kept)), fraction};
}

TimeSlice reversed(const TimeSlice& s) {
  std::vector<Edge> edges;
  edges.reserve(s.edges().size());
  for (const Edge& e : s.edges()) edges.push_back({e.to, e.from, e.weight});
  return TimeSlice(s.year(), s.roster_ptr(), std::move(edges));
}

TimeSlice make_slice(int year, const std::vector<NamedEdge>& edges,
                     const std::vector<std::string>& extra) {
  std::set<CountryCode> nodes;
  for (const auto& x : extra) nodes.emplace(x);
  for (const auto& e : edges) {
    nodes.emplace(e.origin);
    nodes.emplace(e.destination);
  }
  auto roster = std::make_shared<const Roster>(nodes.begin(), nodes.end());
  std::vector<Edge> out;
  for (const auto& e : edges) {
    out.push_back({*find_in_roster(*roster, CountryCode(e.origin)),
                   *find_in_roster(*roster, CountryCode(e.destination)), e.weight});
  }
  return TimeSlice(year, std::move(roster), std::move(out));
}

}  // namespace flownet
