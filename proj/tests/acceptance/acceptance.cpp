// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "app.hpp"
#include "flownet/analysis.hpp"
#include "flownet/betweenness.hpp"
#include "flownet/export.hpp"
#include "flownet/ingest.hpp"
#include "flownet/local_metrics.hpp"
#include "flownet/null_model.hpp"
#include "flownet/spectral.hpp"
#include "support/oracles.hpp"
#include "support/synthetic.hpp"

using namespace flownet;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// --- 1 ---------------------------------------------------------------------

struct TableRow {
  const char* code;
  Weight out;
  Weight in;
  double expected;
};

Verdict drain_index_table() {
  const std::vector<TableRow> rows{
      {"SX", 2, 0, 1.0},          {"ER", 2, 0, 1.0},           {"CF", 1, 0, 1.0},
      {"CW", 1, 0, 1.0},          {"VC", 1, 0, 1.0},           {"ES", 80, 74, 6.0 / 154.0},
      {"GB", 109, 105, 4.0 / 214.0}, {"FR", 78, 78, 0.0},      {"US", 114, 116, -2.0 / 230.0},
      {"IT", 71, 73, -2.0 / 144.0}, {"GN", 0, 2, -1.0},        {"GY", 0, 2, -1.0},
      {"BZ", 0, 2, -1.0},         {"NE", 0, 3, -1.0},          {"TD", 0, 3, -1.0}};
  Verdict v;
  // Each listed country exchanges its 2014 flows with one counterpart.
  std::vector<NamedEdge> edges;
  for (const auto& r : rows) {
    if (r.out) edges.push_back({r.code, "ZZ", r.out});
    if (r.in) edges.push_back({"ZZ", r.code, r.in});
  }
  const TimeSlice s = make_slice(2014, edges);
  const ScoreVector beta = drain_index_scores(s);
  for (const auto& r : rows) {
    const auto direct = drain_index(r.out, r.in);
    const auto sliced = beta.at(CountryCode(r.code));
    v.require(direct && *direct == r.expected, std::string(r.code) + " direct value differs");
    v.require(sliced && *sliced == r.expected, std::string(r.code) + " slice value differs");
  }
  return v;
}

// --- 2, 3 ------------------------------------------------------------------

struct HitsSample {
  std::vector<oracle::DenseGraph> graphs;
  std::size_t skipped_degenerate = 0;
};

// 200 graphs whose W * W^T has a simple leading eigenvalue; with a repeated
// one the leading eigenvector is not unique.
// Default tolerance, but enough iterations to reach the fixed point on
// graphs with a small eigengap.
HitsOptions fixed_point_options() {
  HitsOptions o;
  o.max_iterations = 100000;
  return o;
}

std::size_t default_cap_hits(const TimeSlice& s) {
  const auto r = hits(s);
  return r && !r->report.converged ? 1 : 0;
}

const HitsSample& hits_sample() {
  static const HitsSample sample = [] {
    HitsSample s;
    Rng rng(20240601);
    while (s.graphs.size() < 200) {
      auto g = oracle::random_graph(rng, 2, 6, 4);
      const auto w = oracle::weights(g);
      const auto ev = oracle::symmetric_eigenvalues(oracle::multiply(w, oracle::transpose(w)));
      if (ev.size() > 1 && ev[1] > ev[0] * (1.0 - 1e-9)) {
        ++s.skipped_degenerate;
        continue;
      }
      s.graphs.push_back(std::move(g));
    }
    return s;
  }();
  return sample;
}

Verdict hits_eigen_oracle() {
  Verdict v;
  double worst = 0.0;
  std::size_t at_default_cap = 0;
  for (const auto& g : hits_sample().graphs) {
    const TimeSlice s = oracle::to_slice(g);
    const auto r = hits(s, fixed_point_options());
    if (!r) {
      v.fail("HITS undefined on a graph with edges");
      continue;
    }
    v.require(r->report.converged, "no convergence within 100000 iterations");
    at_default_cap += default_cap_hits(s);
    const auto w = oracle::weights(g);
    const auto wt = oracle::transpose(w);
    const std::vector<double> uniform(g.n, 1.0 / static_cast<double>(g.n));
    const auto hub = oracle::power_method(oracle::multiply(w, wt), uniform);
    const auto authority = oracle::power_method(oracle::multiply(wt, w), oracle::mat_vec(wt, uniform));
    for (std::size_t i = 0; i < g.n; ++i) {
      worst = std::max({worst, std::abs(*r->hub.values[i] - hub[i]),
                        std::abs(*r->authority.values[i] - authority[i])});
    }
  }
  v.require(worst <= 1e-6, "max deviation " + fmt("%.3g", worst));
  v.detail = v.pass ? "max deviation " + fmt("%.3g", worst) + ", " + std::to_string(at_default_cap) +
                          " graphs need more than the default 1000 iterations, " +
                          std::to_string(hits_sample().skipped_degenerate) +
                          " degenerate graphs redrawn"
                    : v.detail;
  return v;
}

Verdict hits_transpose_duality() {
  Verdict v;
  double worst = 0.0;
  for (const auto& g : hits_sample().graphs) {
    const TimeSlice s = oracle::to_slice(g);
    const auto a = hits(s, fixed_point_options());
    const auto b = hits(reversed(s), fixed_point_options());
    v.require(a->report.converged && b->report.converged, "no convergence within 100000 iterations");
    for (std::size_t i = 0; i < g.n; ++i) {
      worst = std::max(worst, std::abs(*a->hub.values[i] - *b->authority.values[i]));
    }
  }
  v.require(worst <= 1e-9, "max deviation " + fmt("%.3g", worst));
  if (v.pass) v.detail = "max deviation " + fmt("%.3g", worst);
  return v;
}

// --- 4 ---------------------------------------------------------------------

Verdict pagerank_oracle() {
  Verdict v;
  Rng rng(20240602);
  double worst = 0.0, worst_sum = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_graph(rng, 1, 6, 4, 0);
    const auto r = pagerank(oracle::to_slice(g));
    const auto expected = oracle::pagerank_solve(g, 0.85);
    double sum = 0.0;
    for (std::size_t i = 0; i < g.n; ++i) {
      worst = std::max(worst, std::abs(*r.scores.values[i] - expected[i]));
      sum += *r.scores.values[i];
    }
    worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
  }
  v.require(worst <= 1e-8, "max deviation " + fmt("%.3g", worst));
  v.require(worst_sum <= 1e-9, "sum off by " + fmt("%.3g", worst_sum));
  const auto pair = pagerank(make_slice(2014, {{"A", "B", 1}, {"B", "A", 1}}));
  v.require(*pair.scores.values[0] == 0.5 && *pair.scores.values[1] == 0.5, "2-cycle not (0.5, 0.5)");
  if (v.pass) v.detail = "max deviation " + fmt("%.3g", worst);
  return v;
}

// --- 5 ---------------------------------------------------------------------

Verdict betweenness_oracle() {
  Verdict v;
  Rng rng(20240603);
  std::vector<oracle::DenseGraph> graphs;
  // The equal-length instance: A->B->C (2, 2) against A->C (1).
  graphs.push_back({3, {{0, 2, 1}, {0, 0, 2}, {0, 0, 0}}});
  while (graphs.size() < 600) graphs.push_back(oracle::random_graph(rng, 2, 5, 3));
  double worst = 0.0;
  for (const auto& g : graphs) {
    const auto expected = oracle::betweenness_exact(g);
    const auto cb = betweenness(oracle::to_slice(g));
    for (std::size_t i = 0; i < g.n; ++i) worst = std::max(worst, std::abs(*cb.values[i] - expected[i]));
  }
  const auto first = betweenness(oracle::to_slice(graphs.front()));
  v.require(std::abs(*first.values[1] - 0.5) <= 1e-9, "equal-length instance: c_b(B) != 0.5");
  v.require(worst <= 1e-9, "max deviation " + fmt("%.3g", worst));
  if (v.pass) v.detail = std::to_string(graphs.size()) + " graphs, max deviation " + fmt("%.3g", worst);
  return v;
}

// --- 6 ---------------------------------------------------------------------

Verdict configuration_model_exactness() {
  Verdict v;
  Rng rng(20240604);
  std::size_t realizations = 0;
  for (int k = 0; k < 20; ++k) {
    const TimeSlice s = oracle::to_slice(oracle::random_graph(rng, 4, 12, 9, 3));
    for (std::uint64_t r = 0; r < 1000; ++r) {
      const TimeSlice x = configuration_model(s, derive_seed(static_cast<Seed>(k), r));
      ++realizations;
      for (NodeIndex i = 0; i < s.size(); ++i) {
        if (x.in_strength(i) != s.in_strength(i) || x.out_strength(i) != s.out_strength(i)) {
          v.fail("strength changed");
        }
        if (x.has_edge(i, i)) v.fail("self-loop");
      }
    }
  }

  const TimeSlice small = make_slice(2014, {{"A", "B", 2}, {"C", "B", 2}, {"A", "D", 1}, {"C", "D", 1}});
  std::vector<std::size_t> out_stubs, in_stubs;
  for (NodeIndex i = 0; i < small.size(); ++i) {
    out_stubs.insert(out_stubs.end(), small.out_strength(i), i);
    in_stubs.insert(in_stubs.end(), small.in_strength(i), i);
  }
  const auto expected = oracle::matching_distribution(out_stubs, in_stubs);
  const int n = 10000;
  std::map<std::vector<std::tuple<std::size_t, std::size_t, std::uint64_t>>, int> seen;
  for (int k = 0; k < n; ++k) {
    const TimeSlice x = configuration_model(small, derive_seed(kDefaultSeed, static_cast<std::uint64_t>(k)));
    std::vector<std::tuple<std::size_t, std::size_t, std::uint64_t>> key;
    for (const Edge& e : x.edges()) key.emplace_back(e.from, e.to, e.weight);
    ++seen[key];
  }
  double worst_z = 0.0;
  for (const auto& [key, p] : expected) {
    const double freq = static_cast<double>(seen[key]) / n;
    const double se = std::sqrt(p * (1.0 - p) / n);
    worst_z = std::max(worst_z, std::abs(freq - p) / se);
  }
  for (const auto& [key, c] : seen) v.require(expected.count(key) == 1, "realization outside the enumeration");
  v.require(worst_z <= 3.0, "frequency off by " + fmt("%.2f", worst_z) + " SE");
  if (v.pass) {
    v.detail = std::to_string(realizations) + " realizations exact; worst frequency deviation " +
               fmt("%.2f", worst_z) + " SE";
  }
  return v;
}

// --- 7 ---------------------------------------------------------------------

Verdict gini_lorenz_properties() {
  Verdict v;
  Rng rng(20240605);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> w(1 + rng.below(40));
    for (auto& x : w) x = static_cast<double>(rng.below(50));
    w[rng.below(w.size())] += 1.0;  // at least one positive value
    const auto g = gini(w);
    const auto curve = lorenz(w);
    if (!g || !curve) {
      v.fail("undefined on a positive population");
      continue;
    }
    v.require(std::abs(curve->gini - *g) <= 1e-12, "lorenz gini differs by " + fmt("%.3g", curve->gini - *g));
    std::vector<double> scaled = w;
    const double c = 0.37 + static_cast<double>(rng.below(1000));
    for (auto& x : scaled) x *= c;
    v.require(std::abs(*gini(scaled) - *g) <= 1e-12, "scale invariance broken");
  }
  for (std::size_t n = 1; n <= 20; ++n) {
    v.require(*gini(std::vector<double>(n, 3.5)) == 0.0, "constant population not 0");
  }
  for (std::size_t n = 2; n <= 10; ++n) {
    std::vector<double> w(n, 0.0);
    w[0] = 1.0;
    const double expected = static_cast<double>(n - 1) / static_cast<double>(n);
    v.require(*gini(w) == expected, "single nonzero of size " + std::to_string(n) + " not (n-1)/n");
  }
  return v;
}

// --- 8 ---------------------------------------------------------------------

std::map<std::string, std::string> read_tree(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (!e.is_regular_file()) continue;
    std::ifstream in(e.path(), std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    files[fs::relative(e.path(), root).generic_string()] = s.str();
  }
  return files;
}

const std::vector<MigrationEvent>& synthetic_events() {
  static const auto events = synthetic::mixed_network(50, 2012, 5, 77);
  return events;
}

int run_report(const fs::path& input, const fs::path& out) {
  const std::string in = input.string(), dir = out.string();
  const char* argv[] = {"flownet", "report", "--input", in.c_str(), "--out-dir", dir.c_str(),
                        "--years", "2012..2016", "--seed", "12345"};
  std::ostringstream log, err;
  return cli::run(static_cast<int>(std::size(argv)), argv, log, err);
}

Verdict report_determinism() {
  Verdict v;
  const fs::path root = fs::temp_directory_path() / "flownet_acceptance_report";
  fs::remove_all(root);
  fs::create_directories(root);
  write_events(synthetic_events(), root / "events.csv");
  const int a = run_report(root / "events.csv", root / "a");
  const int b = run_report(root / "events.csv", root / "b");
  v.require(a == 0 && b == 0, "report exit codes " + std::to_string(a) + ", " + std::to_string(b));
  const auto ta = read_tree(root / "a");
  const auto tb = read_tree(root / "b");
  v.require(!ta.empty() && ta == tb, "bundles differ");
  if (v.pass) v.detail = std::to_string(ta.size()) + " files byte-identical";
  fs::remove_all(root);
  return v;
}

// --- 9 ---------------------------------------------------------------------

Verdict threshold_identity() {
  Verdict v;
  const TemporalNetwork net = build_network(synthetic_events(), {2012, 2016}).network;
  const MetricFn beta = [](const TimeSlice& s) { return drain_index_scores(s); };
  const MetricFn out = [](const TimeSlice& s) { return out_strength_scores(s); };
  for (int t = 2012; t <= 2016; ++t) {
    const TimeSlice s = slice(net, t);
    const ScoreVector tie = out_strength_scores(s);
    const Ranking base = rank(drain_index_scores(s), Direction::descending, &tie);
    const auto runs = threshold_sensitivity(net, t, beta, {1}, Direction::descending, out);
    const Ranking& r = runs.front().ranking;
    bool same = r.entries.size() == base.entries.size() && r.undefined == base.undefined;
    for (std::size_t k = 0; same && k < r.entries.size(); ++k) {
      same = r.entries[k].rank == base.entries[k].rank && r.entries[k].node == base.entries[k].node &&
             std::memcmp(&r.entries[k].score, &base.entries[k].score, sizeof(double)) == 0;
    }
    v.require(same, "ranking differs in " + std::to_string(t));
    v.require(runs.front().retained_fraction == 1.0, "retained fraction below 1");
  }
  return v;
}

// --- 10 --------------------------------------------------------------------

Verdict rich_club_shape() {
  Verdict v;
  const TemporalNetwork net = build_network(synthetic::rich_club(10, 90, 2012, 5, 99), {2012, 2016}).network;

  double min_r = 1.0;
  for (int t = 2012; t <= 2016; ++t) {
    const auto h = hits(slice(net, t));
    const auto r = h ? pearson(h->hub, h->authority) : std::nullopt;
    min_r = std::min(min_r, r.value_or(-1.0));
  }
  v.require(min_r > 0.85, "hub-authority r = " + fmt("%.3f", min_r));

  const auto curve = rank_conditioned_gini(net, HitsRole::hub, Side::out);
  std::vector<double> positions, values;
  for (std::size_t k = 0; k < 10 && k < curve.size(); ++k) {
    if (!curve.mean[k]) continue;
    positions.push_back(static_cast<double>(k + 1));
    values.push_back(*curve.mean[k]);
  }
  const auto rho = spearman(positions, values);
  v.require(positions.size() == 10 && rho && *rho <= 0.0,
            "Spearman(rank, Gini) = " + (rho ? fmt("%.3f", *rho) : std::string("undefined")));

  AnalysisOptions normalized;
  normalized.reciprocity = ReciprocityVariant::normalized;
  const auto series = reciprocity_timeseries(net, 10, HitsRole::hub, normalized);
  double margin = 1.0;
  for (const auto& p : series.points) {
    margin = std::min(margin, p.top_k_mean.value_or(-1.0) - p.network.value_or(2.0));
  }
  v.require(margin > 0.0, "top-10 reciprocity not above network reciprocity");
  if (v.pass) {
    v.detail = "min r " + fmt("%.3f", min_r) + ", Spearman " + fmt("%.3f", *rho) +
               ", min reciprocity margin " + fmt("%.3f", margin);
  }
  return v;
}

struct Criterion {
  int id;
  const char* title;
  double time_limit;  // seconds; 0 = none
  std::function<Verdict()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "drain-index strength oracle", 1.0, drain_index_table},
      {2, "HITS eigen-oracle", 10.0, hits_eigen_oracle},
      {3, "HITS transpose duality", 0.0, hits_transpose_duality},
      {4, "PageRank linear-solve oracle", 0.0, pagerank_oracle},
      {5, "betweenness exact-rational oracle", 0.0, betweenness_oracle},
      {6, "configuration-model exactness", 0.0, configuration_model_exactness},
      {7, "Gini/Lorenz properties", 0.0, gini_lorenz_properties},
      {8, "report determinism", 60.0, report_determinism},
      {9, "threshold identity", 0.0, threshold_identity},
      {10, "rich-club qualitative shape", 0.0, rich_club_shape},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && secs >= c.time_limit) v.fail("took " + fmt("%.2f", secs) + " s");
    failures += !v.pass;
    std::printf("%s  criterion %2d: %s (%.3f s)%s%s\n", v.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                v.detail.empty() ? "" : " - ", v.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
