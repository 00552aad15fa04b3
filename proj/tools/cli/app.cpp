#include "app.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "commands.hpp"
#include "flownet/ingest.hpp"

namespace flownet::cli {

namespace {

constexpr const char* kSeedHelp =
    "base seed of every null-model ensemble (default 20190101). The ensemble of year t uses "
    "base_t = splitmix64(seed + (t + 1) * 0x9E3779B97F4A7C15) and realization k uses "
    "splitmix64(base_t + (k + 1) * 0x9E3779B97F4A7C15), each feeding mt19937_64";

struct Flags {
  std::string years = "2000..2016";
  std::string metrics;
  std::string thresholds = "1,2,3,4,5,6,7,8,9,10";
  std::string variant = "paper";
  std::string roster = "global";
  std::string countries;
  std::string out_dir;
};

void add_io(CLI::App* sub, RunConfig& cfg, Flags& f) {
  sub->add_option("--input", cfg.input, "events CSV (" + std::string(kEventsHeader) +
                                            ") or affiliations CSV (" + kAffiliationsHeader + ")")
      ->required();
  sub->add_option("--out-dir", f.out_dir, "output directory; defaults to $FLOWNET_OUT, else .");
  sub->add_flag("--strict", cfg.strict, "fail on the first bad record or component error");
}

void add_window(CLI::App* sub, RunConfig&, Flags& f) {
  sub->add_option("--years", f.years, "year window A..B or a single year")->capture_default_str();
}

void add_analysis(CLI::App* sub, RunConfig& cfg, Flags& f) {
  add_window(sub, cfg, f);
  sub->add_option("--damping", cfg.damping, "PageRank damping factor")->capture_default_str();
  sub->add_option("--tol", cfg.tolerance, "L1 convergence tolerance")->capture_default_str();
  sub->add_option("--max-iter", cfg.max_iterations, "iteration cap")->capture_default_str();
  sub->add_option("--reciprocity-variant", f.variant, "paper (2 x ratio) or normalized")
      ->check(CLI::IsMember({"paper", "normalized"}))
      ->capture_default_str();
  sub->add_option("--roster", f.roster, "global roster or active nodes per year")
      ->check(CLI::IsMember({"global", "per-year"}))
      ->capture_default_str();
  sub->add_option("--jobs", cfg.jobs, "parallel year workers (0 = all cores); output is unaffected")
      ->capture_default_str();
  sub->add_flag("--allow-nonconverged", cfg.allow_nonconverged,
                "exit 0 even if an iteration hits --max-iter");
  sub->add_flag("--hits-scc", cfg.hits_scc, "compute HITS on the largest SCC of each year");
}

void add_null(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--ensemble-size", cfg.ensemble_size, "null-model realizations per year")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--seed", cfg.seed, kSeedHelp);
}

std::vector<Weight> parse_thresholds(const std::string& text) {
  std::vector<Weight> out;
  for (const auto& token : split_list(text)) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || used == 0 || v < 1) {
      throw std::invalid_argument("thresholds must be positive integers, got '" + token + "'");
    }
    out.push_back(static_cast<Weight>(v));
  }
  if (out.empty()) throw std::invalid_argument("empty threshold list");
  return out;
}

void finalize(RunConfig& cfg, const Flags& f) {
  cfg.years = parse_years(f.years);
  cfg.metrics = split_list(f.metrics);
  for (const auto& m : cfg.metrics) {
    const auto& known = known_metrics();
    if (std::find(known.begin(), known.end(), m) == known.end()) {
      throw std::invalid_argument("unknown metric '" + m + "'");
    }
  }
  cfg.thresholds = parse_thresholds(f.thresholds);
  cfg.reciprocity = f.variant == "normalized" ? ReciprocityVariant::normalized : ReciprocityVariant::paper;
  cfg.roster = f.roster == "per-year" ? RosterMode::per_year : RosterMode::global;
  if (cfg.countries.empty()) cfg.countries = split_list(f.countries);
  if (cfg.jobs == 0) cfg.jobs = std::max(1u, std::thread::hardware_concurrency());

  if (!f.out_dir.empty()) {
    cfg.out_dir = f.out_dir;
  } else if (const char* env = std::getenv("FLOWNET_OUT"); env && *env) {
    cfg.out_dir = env;
  } else {
    cfg.out_dir = ".";
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"flownet: analytics for temporal weighted migration networks"};
  app.require_subcommand(1);
  RunConfig cfg;
  Flags f;

  auto* ingest = app.add_subcommand("ingest", "validate and canonicalize an events or affiliations file");
  add_io(ingest, cfg, f);

  auto* metrics = app.add_subcommand("metrics", "per-year scores, choropleth and ranking CSVs");
  add_io(metrics, cfg, f);
  add_analysis(metrics, cfg, f);
  metrics->add_option("--metrics", f.metrics, "comma list of: drain_index, strength, pagerank, hits, "
                                              "hits_unweighted, betweenness, clustering, reciprocity");

  auto* null = app.add_subcommand("null", "configuration-model comparison statistics");
  add_io(null, cfg, f);
  add_analysis(null, cfg, f);
  add_null(null, cfg);

  auto* report = app.add_subcommand("report", "full analysis bundle with a digest manifest");
  add_io(report, cfg, f);
  add_analysis(report, cfg, f);
  add_null(report, cfg);
  report->add_option("--metrics", f.metrics, "comma list of metrics (default: all)");
  report->add_option("--thresholds", f.thresholds, "edge-weight thresholds for the ranking sensitivity")
      ->capture_default_str();
  report->add_option("--top-k", cfg.top_k, "length of top tables and reciprocity averages")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  report->add_option("--countries", f.countries, "comma list for trajectories (default: 5 busiest)");

  auto* ego = app.add_subcommand("ego", "ego-network DOT files of one country");
  add_io(ego, cfg, f);
  add_window(ego, cfg, f);
  std::string country;
  ego->add_option("--country", country, "ego country code")->required();
  ego->add_option("--direction", cfg.direction, "in, out or both")
      ->check(CLI::IsMember({"in", "out", "both"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (!country.empty()) cfg.countries = {country};
    finalize(cfg, f);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  if (*ingest) return cmd_ingest(cfg, out, err);
  if (*metrics) return cmd_metrics(cfg, out, err);
  if (*null) return cmd_null(cfg, out, err);
  if (*report) return cmd_report(cfg, out, err);
  return cmd_ego(cfg, out, err);
}

}  // namespace flownet::cli
