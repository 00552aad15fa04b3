#include "config.hpp"

#include <stdexcept>

namespace flownet::cli {

const std::vector<std::string>& known_metrics() {
  static const std::vector<std::string> names{
      "drain_index", "strength",    "pagerank",   "hits",
      "hits_unweighted", "betweenness", "clustering", "reciprocity"};
  return names;
}

namespace {

int parse_year(const std::string& token) {
  std::size_t used = 0;
  int year = 0;
  try {
    year = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size()) throw std::invalid_argument("bad year '" + token + "'");
  return year;
}

}  // namespace

YearRange parse_years(const std::string& text) {
  const auto dots = text.find("..");
  YearRange r;
  if (dots == std::string::npos) {
    r.first = r.last = parse_year(text);
  } else {
    r.first = parse_year(text.substr(0, dots));
    r.last = parse_year(text.substr(dots + 2));
  }
  if (r.last < r.first) throw std::invalid_argument("empty year range '" + text + "'");
  return r;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Seed year_seed(Seed seed, int year) { return derive_seed(seed, static_cast<std::uint64_t>(year)); }

const char* to_string(RosterMode mode) {
  return mode == RosterMode::global ? "global" : "per-year";
}

}  // namespace flownet::cli
