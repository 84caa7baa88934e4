#pragma once

#include "wlcovers/graph.hpp"

namespace wlcovers {

/// Experiment base graph: 9 vertices, 10 edges, χ = -1, discrete stable
/// colouring. A triangle 0-1-2 and a square 3-4-5-6 joined by the bridge 0-3,
/// with pendant vertices 7 (on 1) and 8 (on 4).
inline Graph rigid_base_graph() {
  return Graph::from_edge_list(9, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 3}, {1, 7}, {4, 8}});
}

/// A second connected base with χ = -1 and a discrete stable colouring
/// (7 vertices, 8 edges), used to check that class counts depend only on χ.
inline Graph second_rigid_base_graph() {
  return Graph::from_edge_list(7, {{0, 1}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {3, 4}, {3, 6}, {5, 6}});
}

}  // namespace wlcovers
