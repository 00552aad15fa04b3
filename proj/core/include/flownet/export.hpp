#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "flownet/analysis.hpp"
#include "flownet/network.hpp"
#include "flownet/score.hpp"

namespace flownet {

enum class EgoDirection { incoming, outgoing };

struct EgoNetwork {
  CountryCode ego;
  int year = 0;
  EgoDirection direction = EgoDirection::incoming;
  std::map<std::pair<CountryCode, CountryCode>, Weight> edges;

  Weight max_weight() const;
};

/// Ego-incident edges of one direction only. Throws DomainError for an
/// unknown ego.
EgoNetwork ego_network(const TimeSlice& s, const CountryCode& ego, EgoDirection direction);

/// Graphviz digraph with nodes and edges sorted by code.
std::string to_dot(const EgoNetwork& e);

/// `ego_<CODE>_<year>_<in|out>.dot`
std::string ego_file_name(const EgoNetwork& e);

/// `country,value` rows sorted by code; undefined scores leave the value empty.
std::string choropleth_csv(const ScoreVector& v);

/// `rank,country,score` rows followed by undefined nodes with empty rank.
std::string ranking_csv(const Ranking& r);

/// Canonical JSON text: sorted keys, two-space indent, doubles printed with
/// 17 significant digits, trailing newline. Parsing and re-serializing the
/// output reproduces it byte for byte.
std::string canonical_json(const nlohmann::json& doc);

/// {"meta": meta, "metrics": {name: {year: {code: value|null}}}}
nlohmann::json scores_document(const std::vector<ScoreVector>& vectors, const nlohmann::json& meta);
std::string scores_json(const std::vector<ScoreVector>& vectors, const nlohmann::json& meta);

/// Lower-case hex SHA-256.
std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);

/// Writes `content` exactly (binary mode). Throws std::runtime_error on failure.
void write_text_file(const std::filesystem::path& path, std::string_view content);

const char* to_string(EgoDirection direction);

}  // namespace flownet
