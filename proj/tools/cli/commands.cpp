#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <map>
#include <ostream>
#include <thread>

#include "flownet/analysis.hpp"
#include "flownet/betweenness.hpp"
#include "flownet/export.hpp"
#include "flownet/ingest.hpp"
#include "flownet/local_metrics.hpp"
#include "flownet/null_model.hpp"
#include "flownet/spectral.hpp"

#ifndef FLOWNET_VERSION
#define FLOWNET_VERSION "unknown"
#endif

namespace flownet::cli {

namespace {

using json = nlohmann::json;
using Files = std::map<std::string, std::string>;  // relative path -> content

/// A component failed and --strict turns that into a nonzero exit.
class StrictFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  std::vector<std::string> nonconverged;
  std::vector<std::string> failures;

  void merge(const Outcome& o) {
    nonconverged.insert(nonconverged.end(), o.nonconverged.begin(), o.nonconverged.end());
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }
};

// Runs f(k) for k in [0, n) on up to `jobs` threads. Results must be stored
// by index; the first exception in index order is rethrown.
template <typename F>
void parallel_for(std::size_t n, unsigned jobs, F&& f) {
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < n; k = next++) {
      try {
        f(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min<std::size_t>(jobs, n));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

json opt(const std::optional<double>& v) { return v ? json(*v) : json(); }

std::string year_str(int year) { return std::to_string(year); }

int year_at(const RunConfig& cfg, std::size_t k) { return cfg.years.first + static_cast<int>(k); }

template <typename F>
int guarded(std::ostream& err, F&& f) {
  try {
    return f();
  } catch (const StrictFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitIncomplete;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

int finish(const Outcome& outcome, const RunConfig& cfg, std::ostream& err) {
  for (const auto& m : outcome.nonconverged) err << "warning: " << m << "\n";
  for (const auto& m : outcome.failures) err << "warning: " << m << "\n";
  if (!outcome.failures.empty() && cfg.strict) return kExitIncomplete;
  if (!outcome.nonconverged.empty() && !cfg.allow_nonconverged) return kExitIncomplete;
  return kExitOk;
}

void write_files(const std::filesystem::path& dir, const Files& files) {
  for (const auto& [rel, content] : files) write_text_file(dir / rel, content);
}

// --- input -----------------------------------------------------------------

struct Input {
  TemporalNetwork network;
  std::string digest;
};

void report_errors(const std::vector<RecordError>& errors, const std::string& source,
                   std::ostream& err) {
  for (const auto& e : errors) {
    err << source;
    if (e.line) err << ":" << e.line;
    err << ": " << e.message << "\n";
  }
}

std::vector<MigrationEvent> read_events(const RunConfig& cfg, std::ostream& err,
                                        std::size_t* rejected = nullptr,
                                        std::size_t* moves = nullptr) {
  if (cfg.input.empty()) throw std::invalid_argument("--input is required");
  const std::string source = cfg.input.string();
  std::vector<MigrationEvent> events;
  std::size_t bad = 0, inferred = 0;
  switch (detect_input_kind(cfg.input)) {
    case InputKind::events: {
      auto parsed = parse_events(cfg.input, cfg.strict);
      report_errors(parsed.errors, source, err);
      bad = parsed.errors.size();
      events = aggregate_events(parsed.events);
      break;
    }
    case InputKind::affiliations: {
      auto parsed = parse_affiliations(cfg.input, cfg.strict);
      report_errors(parsed.errors, source, err);
      bad = parsed.errors.size();
      events = derive_events(parsed.records);
      for (const auto& e : events) inferred += static_cast<std::size_t>(e.count);
      break;
    }
    case InputKind::unknown:
      throw ParseError(source + ": header matches neither '" + kEventsHeader + "' nor '" +
                       kAffiliationsHeader + "'");
  }
  if (rejected) *rejected = bad;
  if (moves) *moves = inferred;
  return events;
}

Input load_input(const RunConfig& cfg, std::ostream& err) {
  Input in;
  auto events = read_events(cfg, err);
  in.digest = sha256_file(cfg.input);
  auto built = build_network(events, cfg.years);
  report_errors(built.errors, cfg.input.string(), err);
  if (cfg.strict && !built.errors.empty()) {
    throw StrictFailure(std::to_string(built.errors.size()) + " invalid events");
  }
  in.network = std::move(built.network);
  return in;
}

AnalysisOptions analysis_options(const RunConfig& cfg) {
  AnalysisOptions o;
  o.hits.tolerance = cfg.tolerance;
  o.hits.max_iterations = cfg.max_iterations;
  o.per_year_roster = cfg.roster == RosterMode::per_year;
  o.restrict_to_scc = cfg.hits_scc;
  o.reciprocity = cfg.reciprocity;
  return o;
}

std::vector<std::string> selected_metrics(const RunConfig& cfg) {
  return cfg.metrics.empty() ? known_metrics() : cfg.metrics;
}

bool wants(const RunConfig& cfg, const std::string& metric) {
  const auto m = selected_metrics(cfg);
  return std::find(m.begin(), m.end(), metric) != m.end();
}

json run_meta(const RunConfig& cfg, const std::string& digest, const char* command) {
  json m;
  m["command"] = command;
  m["version"] = FLOWNET_VERSION;
  m["input_sha256"] = digest;
  m["years"] = {{"first", cfg.years.first}, {"last", cfg.years.last}};
  m["metrics"] = selected_metrics(cfg);
  m["damping"] = cfg.damping;
  m["tolerance"] = cfg.tolerance;
  m["max_iterations"] = cfg.max_iterations;
  m["thresholds"] = cfg.thresholds;
  m["ensemble_size"] = cfg.ensemble_size;
  m["seed"] = cfg.seed;
  m["seed_derivation"] =
      "year base = splitmix64(seed + (year + 1) * 0x9E3779B97F4A7C15); realization k = "
      "splitmix64(year base + (k + 1) * 0x9E3779B97F4A7C15); generator mt19937_64";
  m["reciprocity_variant"] = to_string(cfg.reciprocity);
  m["roster"] = to_string(cfg.roster);
  m["hits_scc"] = cfg.hits_scc;
  m["top_k"] = cfg.top_k;
  return m;
}

// --- metrics ---------------------------------------------------------------

struct YearScores {
  std::vector<ScoreVector> vectors;
  ScoreVector out_strength;  // tie-break for drain-index rankings
  Outcome outcome;
};

void note_iterations(Outcome& o, const char* what, int year, const IterationReport& r) {
  if (r.converged) return;
  o.nonconverged.push_back(std::string(what) + " " + year_str(year) + " did not converge after " +
                           std::to_string(r.iterations) + " iterations (last change " +
                           std::to_string(r.final_delta) + ")");
}

YearScores compute_scores(const TimeSlice& s, const RunConfig& cfg) {
  YearScores out;
  out.out_strength = out_strength_scores(s);
  auto undefined = [&](const std::string& name) { return ScoreVector(name, s.year(), s.roster_ptr()); };

  if (wants(cfg, "drain_index")) out.vectors.push_back(drain_index_scores(s));
  if (wants(cfg, "strength")) {
    out.vectors.push_back(in_strength_scores(s));
    out.vectors.push_back(out.out_strength);
  }
  if (wants(cfg, "pagerank")) {
    if (s.size() == 0) {
      out.vectors.push_back(undefined("pagerank"));
    } else {
      auto r = pagerank(s, {cfg.damping, cfg.tolerance, cfg.max_iterations});
      note_iterations(out.outcome, "pagerank", s.year(), r.report);
      out.vectors.push_back(std::move(r.scores));
    }
  }
  for (bool weighted : {true, false}) {
    if (!wants(cfg, weighted ? "hits" : "hits_unweighted")) continue;
    AnalysisOptions o = analysis_options(cfg);
    o.hits.weighted = weighted;
    const std::string suffix = weighted ? "" : "_unweighted";
    if (auto r = run_hits(s, o)) {
      note_iterations(out.outcome, weighted ? "hits" : "hits_unweighted", s.year(), r->report);
      out.vectors.push_back(std::move(r->hub));
      out.vectors.push_back(std::move(r->authority));
    } else {
      out.vectors.push_back(undefined("hub" + suffix));
      out.vectors.push_back(undefined("authority" + suffix));
    }
  }
  if (wants(cfg, "betweenness")) out.vectors.push_back(betweenness(s));
  if (wants(cfg, "clustering")) out.vectors.push_back(clustering_scores(s));
  if (wants(cfg, "reciprocity")) out.vectors.push_back(node_reciprocity_scores(s, cfg.reciprocity));
  return out;
}

std::vector<YearScores> all_scores(const Input& in, const RunConfig& cfg) {
  const auto opts = analysis_options(cfg);
  std::vector<YearScores> per_year(cfg.years.size());
  parallel_for(per_year.size(), cfg.jobs, [&](std::size_t k) {
    per_year[k] = compute_scores(prepare_slice(in.network, year_at(cfg, k), opts), cfg);
  });
  return per_year;
}

Ranking rank_scores(const ScoreVector& v, const YearScores& y) {
  return v.name == "drain_index" ? rank(v, Direction::descending, &y.out_strength) : rank(v);
}

std::string file_stem(const ScoreVector& v) { return v.name + "_" + year_str(v.year); }

Outcome metrics_files(const Input& in, const RunConfig& cfg, const std::vector<YearScores>& scores,
                      Files& files) {
  Outcome outcome;
  std::vector<ScoreVector> all;
  for (const auto& y : scores) {
    for (const auto& v : y.vectors) {
      files["choropleth/" + file_stem(v) + ".csv"] = choropleth_csv(v);
      files["rankings/" + file_stem(v) + ".csv"] = ranking_csv(rank_scores(v, y));
      all.push_back(v);
    }
    outcome.merge(y.outcome);
  }
  json meta = run_meta(cfg, in.digest, "metrics");
  meta["nonconverged"] = outcome.nonconverged;
  files["scores.json"] = scores_json(all, meta);
  return outcome;
}

// --- null model --------------------------------------------------------------

struct CurveSpec {
  std::string name;
  HitsRole role;
  bool gini;
  Side side;
};

const std::vector<CurveSpec>& curve_specs() {
  static const std::vector<CurveSpec> specs{
      {"gini_hub_out", HitsRole::hub, true, Side::out},
      {"gini_authority_in", HitsRole::authority, true, Side::in},
      {"neighbor_cc_hub", HitsRole::hub, false, Side::out},
      {"neighbor_cc_authority", HitsRole::authority, false, Side::in}};
  return specs;
}

std::vector<std::optional<double>> curve_row(const TimeSlice& s, const CurveSpec& c,
                                             const AnalysisOptions& o) {
  return c.gini ? gini_by_rank(s, c.role, c.side, o) : neighbor_cc_by_rank(s, c.role, o);
}

std::optional<double> hub_authority_pearson(const TimeSlice& s, const AnalysisOptions& o,
                                            std::size_t& nonconverged) {
  auto r = run_hits(s, o);
  if (!r) return std::nullopt;
  if (!r->report.converged) ++nonconverged;
  return pearson(r->hub, r->authority);
}

using Rows = std::vector<std::vector<std::optional<double>>>;

struct NullYear {
  int year = 0;
  std::string status = "ok";
  std::vector<Seed> seeds;
  std::optional<double> network_pearson;
  SampleSummary null_pearson;
  std::map<std::string, std::vector<std::optional<double>>> network_rows;
  std::map<std::string, Rows> null_rows;
  Outcome outcome;
};

NullYear null_year(const TemporalNetwork& net, int year, const RunConfig& cfg) {
  const auto opts = analysis_options(cfg);
  NullYear y;
  y.year = year;
  const TimeSlice s = prepare_slice(net, year, opts);
  std::size_t nonconverged = 0;
  y.network_pearson = hub_authority_pearson(s, opts, nonconverged);
  for (const auto& spec : curve_specs()) y.network_rows[spec.name] = curve_row(s, spec, opts);
  if (s.total_weight() == 0) {
    y.status = "skipped: no edges";
    return y;
  }
  try {
    const NullEnsemble e = ensemble(s, cfg.ensemble_size, year_seed(cfg.seed, year));
    y.seeds = e.seeds;
    y.null_pearson = ensemble_statistic(
        e, [&](const TimeSlice& r) { return hub_authority_pearson(r, opts, nonconverged); });
    for (const auto& spec : curve_specs()) {
      for (const auto& r : e.realizations) y.null_rows[spec.name].push_back(curve_row(r, spec, opts));
    }
  } catch (const InfeasibleError& ex) {
    y.status = std::string("skipped: ") + ex.what();
    y.outcome.failures.push_back("null model " + year_str(year) + ": " + ex.what());
  }
  if (nonconverged) {
    y.outcome.nonconverged.push_back("hits " + year_str(year) + ": " + std::to_string(nonconverged) +
                                     " run(s) did not converge in the null comparison");
  }
  return y;
}

json curve_json(const RankConditionedCurve& c) {
  json mean = json::array();
  for (const auto& m : c.mean) mean.push_back(opt(m));
  return {{"mean", mean}, {"ci95", c.ci95}, {"samples", c.samples}};
}

json summary_json(const SampleSummary& s) {
  return {{"mean", opt(s.mean)}, {"ci95", opt(s.ci95)}, {"count", s.count}};
}

Outcome null_files(const Input& in, const RunConfig& cfg, Files& files) {
  std::vector<NullYear> years(cfg.years.size());
  parallel_for(years.size(), cfg.jobs,
               [&](std::size_t k) { years[k] = null_year(in.network, year_at(cfg, k), cfg); });

  Outcome outcome;
  json doc;
  doc["meta"] = run_meta(cfg, in.digest, "null");
  doc["years"] = json::object();
  for (const auto& y : years) {
    json& j = doc["years"][year_str(y.year)];
    j["status"] = y.status;
    j["seeds"] = y.seeds;
    j["hub_authority_pearson"] = {{"network", opt(y.network_pearson)},
                                  {"null", summary_json(y.null_pearson)}};
    outcome.merge(y.outcome);
  }
  doc["curves"] = json::object();
  for (const auto& spec : curve_specs()) {
    Rows network, null;
    for (const auto& y : years) {
      network.push_back(y.network_rows.at(spec.name));
      if (auto it = y.null_rows.find(spec.name); it != y.null_rows.end()) {
        null.insert(null.end(), it->second.begin(), it->second.end());
      }
    }
    doc["curves"][spec.name] = {
        {"network", curve_json(aggregate_by_position(spec.name, "network", network))},
        {"null", curve_json(aggregate_by_position(spec.name, "null", null))}};
  }
  doc["meta"]["problems"] = outcome.failures;
  files["null.json"] = canonical_json(doc);
  return outcome;
}

// --- report ----------------------------------------------------------------

json ranking_json(const Ranking& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"rank", e.rank}, {"country", e.node.str()}, {"score", e.score}});
  }
  json undefined = json::array();
  for (const auto& c : r.undefined) undefined.push_back(c.str());
  return {{"metric", r.metric}, {"tiebreak", r.tiebreak}, {"entries", entries}, {"undefined", undefined}};
}

json lorenz_json(const LorenzClassesResult& r) {
  json classes = json::array();
  for (const auto& c : r.classes) {
    json last = c.range.last == std::numeric_limits<std::size_t>::max() ? json("end") : json(c.range.last);
    classes.push_back({{"first", c.range.first},
                       {"last", last},
                       {"members", c.members},
                       {"mean_gini", c.mean_gini},
                       {"grid", c.grid},
                       {"mean", c.mean},
                       {"ci95", c.ci95}});
  }
  return {{"classes", classes}, {"warnings", r.warnings}};
}

json reciprocity_json(const ReciprocitySeries& s) {
  json points = json::array();
  for (const auto& p : s.points) {
    points.push_back({{"year", p.year}, {"network", opt(p.network)}, {"top_k_mean", opt(p.top_k_mean)}});
  }
  return {{"role", to_string(s.role)}, {"top_k", s.top_k}, {"variant", to_string(s.variant)}, {"points", points}};
}

std::vector<CountryCode> trajectory_countries(const RunConfig& cfg, const TemporalNetwork& net) {
  std::vector<CountryCode> out;
  if (!cfg.countries.empty()) {
    for (const auto& c : cfg.countries) out.emplace_back(c);
    return out;
  }
  // Five busiest countries over the window, ties by code.
  std::vector<std::pair<Weight, CountryCode>> volume;
  const auto& roster = net.nodes();
  std::vector<Weight> total(roster.size(), 0);
  for (int t = cfg.years.first; t <= cfg.years.last; ++t) {
    for (const Edge& e : net.edges(t)) {
      total[e.from] += e.weight;
      total[e.to] += e.weight;
    }
  }
  for (std::size_t i = 0; i < roster.size(); ++i) {
    if (total[i] > 0) volume.emplace_back(total[i], roster[i]);
  }
  std::sort(volume.begin(), volume.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  for (std::size_t k = 0; k < volume.size() && k < 5; ++k) out.push_back(volume[k].second);
  return out;
}

json trajectories_json(const std::vector<Trajectory>& ts) {
  json out = json::array();
  for (const auto& t : ts) {
    json points = json::array();
    for (const auto& p : t.points) {
      points.push_back({{"year", p.year}, {"betweenness", p.betweenness}, {"clustering", p.clustering}});
    }
    out.push_back({{"country", t.country.str()}, {"points", points}, {"skipped_years", t.skipped_years}});
  }
  return out;
}

std::string top_table(const YearScores& y, std::size_t k) {
  std::vector<Ranking> rankings;
  std::string out = "rank";
  for (const auto& v : y.vectors) {
    out += "," + v.name;
    rankings.push_back(rank_scores(v, y));
  }
  out += "\n";
  std::size_t rows = 0;
  for (const auto& r : rankings) rows = std::max(rows, std::min(k, r.entries.size()));
  for (std::size_t pos = 0; pos < rows; ++pos) {
    out += std::to_string(pos + 1);
    for (const auto& r : rankings) {
      out += ",";
      if (pos < r.entries.size()) out += r.entries[pos].node.str();
    }
    out += "\n";
  }
  return out;
}

struct AnalysisYear {
  json thresholds;
  json lorenz;
};

void analysis_files(const Input& in, const RunConfig& cfg, const std::vector<YearScores>& scores,
                    Files& files) {
  const auto opts = analysis_options(cfg);
  std::vector<AnalysisYear> years(cfg.years.size());
  const MetricFn beta = [](const TimeSlice& s) { return drain_index_scores(s); };
  const MetricFn out_strength = [](const TimeSlice& s) { return out_strength_scores(s); };
  parallel_for(years.size(), cfg.jobs, [&](std::size_t k) {
    const int t = year_at(cfg, k);
    json thresholds = json::array();
    for (const auto& tr : threshold_sensitivity(in.network, t, beta, cfg.thresholds,
                                                Direction::descending, out_strength)) {
      thresholds.push_back({{"threshold", tr.threshold},
                            {"retained_fraction", tr.retained_fraction},
                            {"ranking", ranking_json(tr.ranking)}});
    }
    years[k].thresholds = std::move(thresholds);
    years[k].lorenz = {
        {"hub_out", lorenz_json(lorenz_by_class(in.network, t, HitsRole::hub, Side::out,
                                                default_lorenz_classes(), opts))},
        {"authority_in", lorenz_json(lorenz_by_class(in.network, t, HitsRole::authority, Side::in,
                                                     default_lorenz_classes(), opts))}};
  });

  json doc;
  doc["meta"] = run_meta(cfg, in.digest, "report");
  doc["threshold_sensitivity"] = json::object();
  doc["lorenz_classes"] = json::object();
  for (std::size_t k = 0; k < years.size(); ++k) {
    const std::string t = year_str(year_at(cfg, k));
    doc["threshold_sensitivity"][t] = std::move(years[k].thresholds);
    doc["lorenz_classes"][t] = std::move(years[k].lorenz);
  }
  doc["reciprocity"] = {
      {"hub", reciprocity_json(reciprocity_timeseries(in.network, cfg.top_k, HitsRole::hub, opts))},
      {"authority",
       reciprocity_json(reciprocity_timeseries(in.network, cfg.top_k, HitsRole::authority, opts))}};
  doc["trajectories"] = trajectories_json(trajectories(in.network, trajectory_countries(cfg, in.network)));
  files["analysis.json"] = canonical_json(doc);

  for (std::size_t k = 0; k < scores.size(); ++k) {
    files["tables/top" + std::to_string(cfg.top_k) + "_" + year_str(year_at(cfg, k)) + ".csv"] =
        top_table(scores[k], cfg.top_k);
  }
}

}  // namespace

int cmd_ingest(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    std::size_t rejected = 0, moves = 0;
    const auto events = read_events(cfg, err, &rejected, &moves);
    std::filesystem::create_directories(cfg.out_dir);
    write_events(events, cfg.out_dir / "events.csv");
    log << "events: " << events.size() << "\n"
        << "rejected rows: " << rejected << "\n"
        << "inferred moves: " << moves << "\n";
    return kExitOk;
  });
}

int cmd_metrics(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    const Input in = load_input(cfg, err);
    Files files;
    const Outcome outcome = metrics_files(in, cfg, all_scores(in, cfg), files);
    write_files(cfg.out_dir, files);
    log << "metrics: wrote " << files.size() << " files to " << cfg.out_dir.string() << "\n";
    return finish(outcome, cfg, err);
  });
}

int cmd_null(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    const Input in = load_input(cfg, err);
    Files files;
    const Outcome outcome = null_files(in, cfg, files);
    write_files(cfg.out_dir, files);
    log << "null: " << cfg.ensemble_size << " realizations per year, wrote "
        << (cfg.out_dir / "null.json").string() << "\n";
    return finish(outcome, cfg, err);
  });
}

int cmd_report(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    const Input in = load_input(cfg, err);
    Files files;
    const auto scores = all_scores(in, cfg);
    Outcome outcome = metrics_files(in, cfg, scores, files);
    outcome.merge(null_files(in, cfg, files));
    analysis_files(in, cfg, scores, files);

    json manifest;
    manifest["meta"] = run_meta(cfg, in.digest, "report");
    manifest["files"] = json::object();
    for (const auto& [rel, content] : files) manifest["files"][rel] = sha256_hex(content);
    files["manifest.json"] = canonical_json(manifest);

    write_files(cfg.out_dir, files);
    log << "report: wrote " << files.size() << " files to " << cfg.out_dir.string() << "\n";
    return finish(outcome, cfg, err);
  });
}

int cmd_ego(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.countries.size() != 1) throw std::invalid_argument("ego needs exactly one country");
    std::vector<EgoDirection> directions;
    if (cfg.direction == "in" || cfg.direction == "both") directions.push_back(EgoDirection::incoming);
    if (cfg.direction == "out" || cfg.direction == "both") directions.push_back(EgoDirection::outgoing);
    if (directions.empty()) throw std::invalid_argument("direction must be in, out or both");

    const Input in = load_input(cfg, err);
    const CountryCode ego(cfg.countries.front());
    if (!in.network.index_of(ego)) throw DomainError("unknown country " + ego.str());
    Files files;
    for (int t = cfg.years.first; t <= cfg.years.last; ++t) {
      const TimeSlice s = slice(in.network, t);
      for (auto d : directions) {
        const EgoNetwork e = ego_network(s, ego, d);
        files[ego_file_name(e)] = to_dot(e);
      }
    }
    write_files(cfg.out_dir, files);
    log << "ego: wrote " << files.size() << " files to " << cfg.out_dir.string() << "\n";
    return kExitOk;
  });
}

}  // namespace flownet::cli
