#include "flownet/export.hpp"

#include <array>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

namespace flownet {

namespace {

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  std::array<char, 40> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", x);
  return buf.data();
}

std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

void write_json(const nlohmann::json& j, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
  const std::string close_pad(static_cast<std::size_t>(depth) * 2, ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map order: sorted
        if (!first) out += ",\n";
        first = false;
        out += pad + quote(it.key()) + ": ";
        write_json(it.value(), out, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) out += ",\n";
        out += pad;
        write_json(j[k], out, depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case nlohmann::json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

Weight EgoNetwork::max_weight() const {
  Weight m = 0;
  for (const auto& [k, w] : edges) m = std::max(m, w);
  return m;
}

EgoNetwork ego_network(const TimeSlice& s, const CountryCode& ego, EgoDirection direction) {
  auto i = s.index_of(ego);
  if (!i) throw DomainError("unknown ego country " + ego.str());
  EgoNetwork out{ego, s.year(), direction, {}};
  if (direction == EgoDirection::incoming) {
    for (const Edge& e : s.in_edges(*i)) out.edges[{s.node(e.from), ego}] = e.weight;
  } else {
    for (const Edge& e : s.out_edges(*i)) out.edges[{ego, s.node(e.to)}] = e.weight;
  }
  return out;
}

std::string to_dot(const EgoNetwork& e) {
  std::set<CountryCode> nodes{e.ego};
  for (const auto& [key, w] : e.edges) {
    nodes.insert(key.first);
    nodes.insert(key.second);
  }
  std::ostringstream out;
  std::string name = ego_file_name(e);
  name.resize(name.size() - 4);  // drop ".dot"
  out << "digraph " << quote(name) << " {\n";
  out << "  graph [ego=" << quote(e.ego.str()) << ", year=" << e.year
      << ", direction=" << quote(to_string(e.direction)) << ", max_weight=" << e.max_weight()
      << "];\n";
  for (const auto& n : nodes) out << "  " << quote(n.str()) << ";\n";
  for (const auto& [key, w] : e.edges) {
    out << "  " << quote(key.first.str()) << " -> " << quote(key.second.str())
        << " [weight=" << w << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string ego_file_name(const EgoNetwork& e) {
  return "ego_" + e.ego.str() + "_" + std::to_string(e.year) + "_" +
         (e.direction == EgoDirection::incoming ? "in" : "out") + ".dot";
}

std::string choropleth_csv(const ScoreVector& v) {
  std::string out = "country,value\n";
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += v.node(i).str() + ",";
    if (v.values[i]) out += format_double(*v.values[i]);
    out += "\n";
  }
  return out;
}

std::string ranking_csv(const Ranking& r) {
  std::string out = "rank,country,score\n";
  for (const auto& e : r.entries) {
    out += std::to_string(e.rank) + "," + e.node.str() + "," + format_double(e.score) + "\n";
  }
  for (const auto& c : r.undefined) out += "," + c.str() + ",\n";
  return out;
}

std::string canonical_json(const nlohmann::json& doc) {
  std::string out;
  write_json(doc, out, 0);
  out += "\n";
  return out;
}

nlohmann::json scores_document(const std::vector<ScoreVector>& vectors,
                               const nlohmann::json& meta) {
  nlohmann::json doc;
  doc["meta"] = meta;
  doc["metrics"] = nlohmann::json::object();
  for (const auto& v : vectors) {
    nlohmann::json block = nlohmann::json::object();
    for (std::size_t i = 0; i < v.size(); ++i) {
      block[v.node(i).str()] = v.values[i] ? nlohmann::json(*v.values[i]) : nlohmann::json();
    }
    doc["metrics"][v.name][std::to_string(v.year)] = std::move(block);
  }
  return doc;
}

std::string scores_json(const std::vector<ScoreVector>& vectors, const nlohmann::json& meta) {
  return canonical_json(scores_document(vectors, meta));
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int k = 0; k < len; ++k) {
    out.push_back(hex[digest[k] >> 4]);
    out.push_back(hex[digest[k] & 0xF]);
  }
  return out;
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return sha256_hex(bytes);
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

const char* to_string(EgoDirection direction) {
  return direction == EgoDirection::incoming ? "incoming" : "outgoing";
}

}  // namespace flownet
