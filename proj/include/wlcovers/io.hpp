#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "wlcovers/covers.hpp"
#include "wlcovers/refine.hpp"

namespace wlcovers {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Malformed input, with the 1-based line it was found on (0 if unknown).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Edge-list text: a header line "n m" followed by m lines "u v" (0-based).
/// Blank lines and lines starting with '#' are ignored.
Graph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list: header, then edges with u < v in
/// lexicographic order, LF-terminated.
std::string serialize_edge_list(const Graph& g);

/// Undirected DOT; nodes are labelled by colour id when a colouring is given.
std::string to_dot(const Graph& g, const std::optional<Coloring>& coloring = std::nullopt,
                   std::string_view name = "G");

nlohmann::ordered_json voltage_to_json(const VoltageAssignment& va);

/// Parses {"degree": d, "edges": [[u,w],...], "perms": [[...],...]}. Edges may
/// be listed in any order and orientation; the result is normalized to the
/// base's distinguished-edge order and checked against `base`.
VoltageAssignment voltage_from_json(const nlohmann::json& j, const Graph& base);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

Graph read_graph_file(const std::filesystem::path& path);
VoltageAssignment read_voltage_file(const std::filesystem::path& path, const Graph& base);

/// Lower-case hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

/// Record of one CLI invocation.
struct RunManifest {
  std::string command;
  std::vector<std::string> arguments;
  /// (path, sha256) per input file.
  std::vector<std::pair<std::string, std::string>> input_digests;
  std::vector<std::string> outputs;
  std::chrono::milliseconds wall_time{0};

  nlohmann::ordered_json to_json() const;
};

}  // namespace wlcovers
