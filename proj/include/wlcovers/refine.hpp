#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wlcovers/graph.hpp"

namespace wlcovers {

using Color = std::size_t;

/// Per-vertex colour ids, dense in 0..class_count()-1.
struct Coloring {
  std::vector<Color> colors;

  std::size_t class_count() const;
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Colour id -> number of vertices carrying it.
using ColorHistogram = std::map<Color, std::size_t>;

ColorHistogram histogram(const Coloring& c);
ColorHistogram histogram(const Coloring& c, std::size_t begin, std::size_t end);

/// Round-by-round history of colour refinement.
///
/// rounds[0] is the initial colouring. rounds[stable_round] is the first
/// colouring whose partition equals that of the round before it; it is also
/// the last entry.
struct RefinementTrace {
  std::vector<Coloring> rounds;
  std::size_t stable_round = 0;

  const Coloring& stable() const { return rounds.back(); }
};

/// Colour refinement.
///
/// The round-i signature of v is (c_{i-1}(v), sorted multiset of c_{i-1}(u)
/// over neighbours u). The distinct signatures of a round are sorted
/// lexicographically and numbered 0, 1, ... in that order, so two graphs that
/// produce the same signature set in a round receive the same ids.
///
/// `initial` defaults to the constant colouring. A supplied initial colouring
/// is renumbered densely, preserving the order of its ids. Throws
/// std::invalid_argument on a length mismatch.
RefinementTrace color_refine(const Graph& g, const std::optional<Coloring>& initial = std::nullopt);

/// Stable colouring only.
Coloring stable_coloring(const Graph& g, const std::optional<Coloring>& initial = std::nullopt);

struct WLVerdict {
  bool equivalent = false;
  /// First round at which the histograms of the two sides differ; empty when
  /// the graphs are equivalent.
  std::optional<std::size_t> distinguishing_round;
};

/// WL test: refine g ⊕ h jointly and compare per-side histograms round by round.
WLVerdict wl_test(const Graph& g, const Graph& h);

/// Stable colouring has one class per vertex.
bool is_discrete(const Graph& g);

/// Connected components grouped by the set of stable colours they use.
struct ComponentGroup {
  /// Indices into connected_components(g).groups.
  std::vector<std::size_t> components;
  /// Sorted stable colours shared by every member.
  std::vector<Color> colors;
};

struct ComponentGrouping {
  VertexPartition components;
  std::vector<ComponentGroup> groups;
};

/// Two finite connected components have equal or disjoint stable colour sets,
/// so grouping by colour set is a partition. Throws std::logic_error if a
/// partial overlap is ever observed.
ComponentGrouping component_color_groups(const Graph& g);

struct DecompositionGroup {
  std::vector<std::size_t> g_components;  // indices into connected_components(g)
  std::vector<std::size_t> h_components;  // indices into connected_components(h)
  std::size_t g_order = 0;
  std::size_t h_order = 0;
};

struct DecompositionVerdict {
  bool passed = false;
  std::vector<DecompositionGroup> groups;
  /// Index into `groups` of the first failing group.
  std::optional<std::size_t> offending_group;
  std::string message;
};

/// Checks the component-level conditions under which g and h are WL
/// equivalent: after joint refinement of g ⊕ h, the components are grouped by
/// stable colour set, every group contains components from both sides, and in
/// every group the total orders of both sides agree.
DecompositionVerdict check_decomposition(const Graph& g, const Graph& h);

}  // namespace wlcovers
