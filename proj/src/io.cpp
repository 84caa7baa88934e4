#include "wlcovers/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace wlcovers {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t parse_count(std::string_view token, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" +
                               std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, header ? "expected 'u v'" : "malformed header, expected 'n m'");
    }
    if (!header) {
      header.emplace(parse_count(tokens[0], line_no, "vertex count"), parse_count(tokens[1], line_no, "edge count"));
    } else {
      const std::size_t u = parse_count(tokens[0], line_no, "endpoint");
      const std::size_t v = parse_count(tokens[1], line_no, "endpoint");
      if (edges.size() == header->second) {
        throw ParseError(line_no, "more edge lines than the " + std::to_string(header->second) + " declared");
      }
      if (u >= header->first || v >= header->first) {
        throw ParseError(line_no, "vertex out of range: (" + std::to_string(u) + "," + std::to_string(v) +
                                      ") with n = " + std::to_string(header->first));
      }
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      edges.push_back({u, v});
    }
    if (end == text.size()) break;
  }
  if (!header) throw ParseError(line_no, "missing 'n m' header");
  if (edges.size() != header->second) {
    throw ParseError(line_no, "declared " + std::to_string(header->second) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  return Graph::from_edge_list(header->first, edges);
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::string to_dot(const Graph& g, const std::optional<Coloring>& coloring, std::string_view name) {
  std::string out = "graph " + std::string(name) + " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out += "  " + std::to_string(v);
    if (coloring) out += " [label=\"" + std::to_string(coloring->colors.at(v)) + "\"]";
    out += ";\n";
  }
  for (const Edge& e : g.edges()) out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  out += "}\n";
  return out;
}

nlohmann::ordered_json voltage_to_json(const VoltageAssignment& va) {
  nlohmann::ordered_json j;
  j["degree"] = va.degree;
  j["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : va.distinguished_edges) j["edges"].push_back({e.u, e.v});
  j["perms"] = va.permutations;
  return j;
}

VoltageAssignment voltage_from_json(const nlohmann::json& j, const Graph& base) {
  try {
    const std::size_t degree = j.at("degree").get<std::size_t>();
    const auto raw_edges = j.at("edges").get<std::vector<std::vector<std::size_t>>>();
    const auto raw_perms = j.at("perms").get<std::vector<Permutation>>();
    if (raw_edges.size() != raw_perms.size()) {
      throw std::invalid_argument("'edges' and 'perms' have different lengths");
    }
    VoltageAssignment va;
    va.degree = degree;
    va.distinguished_edges = spanning_tree_split(base).distinguished_edges;
    va.permutations.assign(va.distinguished_edges.size(), {});
    std::vector<bool> filled(va.distinguished_edges.size(), false);
    for (std::size_t k = 0; k < raw_edges.size(); ++k) {
      if (raw_edges[k].size() != 2) throw std::invalid_argument("edge entries must be [u, w] pairs");
      const std::size_t u = raw_edges[k][0];
      const std::size_t w = raw_edges[k][1];
      Permutation perm = raw_perms[k];
      if (u > w) {
        // Reversed orientation carries the inverse permutation.
        if (!is_permutation_of_size(perm, degree)) throw std::invalid_argument("invalid permutation");
        Permutation inv(degree);
        for (std::size_t i = 0; i < degree; ++i) inv[perm[i]] = i;
        perm = std::move(inv);
      }
      const Edge e{std::min(u, w), std::max(u, w)};
      const auto it = std::find(va.distinguished_edges.begin(), va.distinguished_edges.end(), e);
      if (it == va.distinguished_edges.end()) {
        throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(w) +
                                    ") is not a distinguished edge of the base");
      }
      const std::size_t slot = static_cast<std::size_t>(it - va.distinguished_edges.begin());
      if (filled[slot]) throw std::invalid_argument("edge listed twice");
      filled[slot] = true;
      va.permutations[slot] = std::move(perm);
    }
    check_voltage(base, va);
    return va;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("voltage JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, std::string("voltage JSON: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string() + " for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

Graph read_graph_file(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return parse_edge_list(text);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.what());
  }
}

VoltageAssignment read_voltage_file(const std::filesystem::path& path, const Graph& base) {
  const std::string text = read_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, path.string() + ": " + e.what());
  }
  return voltage_from_json(j, base);
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

nlohmann::ordered_json RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["tool"] = "wlcovers";
  j["version"] = std::string(kToolVersion);
  j["command"] = command;
  j["arguments"] = arguments;
  j["inputs"] = nlohmann::ordered_json::array();
  for (const auto& [path, digest] : input_digests) j["inputs"].push_back({{"path", path}, {"sha256", digest}});
  j["outputs"] = outputs;
  j["wall_time_ms"] = wall_time.count();
  return j;
}

}  // namespace wlcovers
