#include "flownet/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <tuple>

namespace flownet {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

template <typename Int>
std::optional<Int> parse_int(std::string_view s) {
  Int value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

void check_header(std::istream& in, const char* expected) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("empty input: missing header");
  if (strip_cr(header) != expected) {
    throw ParseError("unexpected header '" + strip_cr(header) + "', expected '" + expected + "'");
  }
}

// Reads rows after the header, handing each non-empty one to `row` which
// returns an error message or empty on success.
template <typename RowFn>
std::vector<RecordError> for_each_row(std::istream& in, bool strict, RowFn row) {
  std::vector<RecordError> errors;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(std::move(line));
    if (line.empty()) continue;
    std::string message = row(split(line));
    if (message.empty()) continue;
    if (strict) throw ParseError("line " + std::to_string(line_no) + ": " + message);
    errors.push_back({line_no, std::move(message)});
  }
  return errors;
}

std::optional<CountryCode> parse_code(std::string_view s) {
  try {
    return CountryCode(s);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  return in;
}

}  // namespace

ParsedEvents parse_events(std::istream& in, bool strict) {
  check_header(in, kEventsHeader);
  ParsedEvents result;
  result.errors = for_each_row(in, strict, [&](const std::vector<std::string_view>& f) {
    if (f.size() != 4) return "expected 4 fields, got " + std::to_string(f.size());
    auto origin = parse_code(f[0]);
    auto destination = parse_code(f[1]);
    if (!origin) return "bad origin '" + std::string(f[0]) + "'";
    if (!destination) return "bad destination '" + std::string(f[1]) + "'";
    auto year = parse_int<int>(f[2]);
    if (!year) return "bad year '" + std::string(f[2]) + "'";
    auto count = parse_int<std::int64_t>(f[3]);
    if (!count) return "bad count '" + std::string(f[3]) + "'";
    if (*count <= 0) return "non-positive count " + std::to_string(*count);
    if (*origin == *destination) return "self-loop " + origin->str() + "->" + destination->str();
    result.events.push_back({*origin, *destination, *year, *count});
    return std::string();
  });
  return result;
}

ParsedEvents parse_events(const std::filesystem::path& path, bool strict) {
  auto in = open_input(path);
  return parse_events(in, strict);
}

ParsedAffiliations parse_affiliations(std::istream& in, bool strict) {
  check_header(in, kAffiliationsHeader);
  ParsedAffiliations result;
  result.errors = for_each_row(in, strict, [&](const std::vector<std::string_view>& f) {
    if (f.size() != 4) return "expected 4 fields, got " + std::to_string(f.size());
    if (f[0].empty()) return std::string("empty researcher id");
    auto country = parse_code(f[1]);
    if (!country) return "bad country '" + std::string(f[1]) + "'";
    auto start = parse_int<int>(f[2]);
    if (!start) return "bad start_year '" + std::string(f[2]) + "'";
    std::optional<int> end;
    if (!f[3].empty()) {
      end = parse_int<int>(f[3]);
      if (!end) return "bad end_year '" + std::string(f[3]) + "'";
      if (*end < *start) return std::string("end_year before start_year");
    }
    result.records.push_back({std::string(f[0]), *country, *start, end});
    return std::string();
  });
  return result;
}

ParsedAffiliations parse_affiliations(const std::filesystem::path& path, bool strict) {
  auto in = open_input(path);
  return parse_affiliations(in, strict);
}

std::vector<MigrationEvent> derive_events(std::span<const AffiliationRecord> records) {
  std::map<std::string, std::vector<const AffiliationRecord*>> by_researcher;
  for (const auto& r : records) by_researcher[r.researcher_id].push_back(&r);

  // absent end year sorts last
  auto key = [](const AffiliationRecord* r) {
    return std::make_tuple(r->start_year, !r->end_year.has_value(), r->end_year.value_or(0),
                           r->country);
  };

  std::vector<MigrationEvent> moves;
  for (auto& [id, history] : by_researcher) {
    std::sort(history.begin(), history.end(),
              [&](const auto* a, const auto* b) { return key(a) < key(b); });
    for (std::size_t k = 1; k < history.size(); ++k) {
      const auto& prev = *history[k - 1];
      const auto& next = *history[k];
      if (prev.country != next.country) {
        moves.push_back({prev.country, next.country, next.start_year, 1});
      }
    }
  }
  return aggregate_events(moves);
}

std::vector<MigrationEvent> aggregate_events(std::span<const MigrationEvent> events) {
  std::map<std::tuple<int, CountryCode, CountryCode>, std::int64_t> totals;
  for (const auto& e : events) totals[{e.year, e.origin, e.destination}] += e.count;
  std::vector<MigrationEvent> result;
  result.reserve(totals.size());
  for (const auto& [k, count] : totals) {
    result.push_back({std::get<1>(k), std::get<2>(k), std::get<0>(k), count});
  }
  return result;
}

void write_events(std::span<const MigrationEvent> events, std::ostream& out) {
  out << kEventsHeader << '\n';
  for (const auto& e : aggregate_events(events)) {
    out << e.origin.str() << ',' << e.destination.str() << ',' << e.year << ',' << e.count << '\n';
  }
}

void write_events(std::span<const MigrationEvent> events, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_events(events, out);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

InputKind detect_input_kind(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::string header;
  std::getline(in, header);
  header = strip_cr(header);
  if (header == kEventsHeader) return InputKind::events;
  if (header == kAffiliationsHeader) return InputKind::affiliations;
  return InputKind::unknown;
}

}  // namespace flownet
