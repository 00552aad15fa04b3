#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flownet/country.hpp"
#include "flownet/errors.hpp"
#include "flownet/network.hpp"

namespace flownet {

inline constexpr const char* kEventsHeader = "origin,destination,year,count";
inline constexpr const char* kAffiliationsHeader = "researcher_id,country,start_year,end_year";

struct AffiliationRecord {
  std::string researcher_id;
  CountryCode country;
  int start_year = 0;
  std::optional<int> end_year;  // nullopt = ongoing
};

struct ParsedEvents {
  std::vector<MigrationEvent> events;
  std::vector<RecordError> errors;
};

struct ParsedAffiliations {
  std::vector<AffiliationRecord> records;
  std::vector<RecordError> errors;
};

/// Reads an event CSV. Bad rows are collected in `errors`; with `strict` the
/// first bad row throws ParseError instead. A missing or wrong header always
/// throws.
ParsedEvents parse_events(std::istream& in, bool strict = false);
ParsedEvents parse_events(const std::filesystem::path& path, bool strict = false);

ParsedAffiliations parse_affiliations(std::istream& in, bool strict = false);
ParsedAffiliations parse_affiliations(const std::filesystem::path& path, bool strict = false);

/// Infers one move per consecutive pair of a researcher's records with
/// different countries, dated at the later record's start year, then
/// aggregates by (origin, destination, year).
std::vector<MigrationEvent> derive_events(std::span<const AffiliationRecord> records);

/// Sums counts of identical (origin, destination, year) keys and sorts by
/// (year, origin, destination).
std::vector<MigrationEvent> aggregate_events(std::span<const MigrationEvent> events);

/// Canonical event CSV: header plus aggregated rows sorted by
/// (year, origin, destination), LF line endings.
void write_events(std::span<const MigrationEvent> events, std::ostream& out);
void write_events(std::span<const MigrationEvent> events, const std::filesystem::path& path);

enum class InputKind { events, affiliations, unknown };

/// Classifies a CSV file by its header line.
InputKind detect_input_kind(const std::filesystem::path& path);

}  // namespace flownet
