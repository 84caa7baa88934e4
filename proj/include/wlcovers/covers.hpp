#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wlcovers/graph.hpp"

namespace wlcovers {

/// Permutation of {0..d-1}, stored as the images of 0..d-1.
using Permutation = std::vector<std::size_t>;

bool is_permutation_of_size(const Permutation& p, std::size_t d);

/// Covering map total -> base given by vertex_map.
struct CoveringMap {
  Graph total;
  Graph base;
  std::vector<Vertex> vertex_map;

  /// Vertices of `total` over base vertex v, ascending.
  std::vector<Vertex> fiber(Vertex v) const;
};

/// Split of a connected graph's edges by the BFS spanning tree rooted at 0.
///
/// Neighbours are visited in ascending order. Non-tree ("distinguished")
/// edges are oriented u < w and listed in lexicographic order.
struct SpanningTreeSplit {
  std::vector<Edge> tree_edges;
  std::vector<Edge> distinguished_edges;
};

SpanningTreeSplit spanning_tree_split(const Graph& base);

/// Degree-d voltage assignment: one permutation per distinguished edge u->w.
/// Sheet i of u is joined to sheet permutations[k][i] of w along the k-th
/// distinguished edge; spanning-tree edges carry the identity.
struct VoltageAssignment {
  std::size_t degree = 1;
  std::vector<Edge> distinguished_edges;
  std::vector<Permutation> permutations;

  friend bool operator==(const VoltageAssignment&, const VoltageAssignment&) = default;
};

/// Assignment with the base's distinguished edges and the given permutations.
VoltageAssignment make_voltage(const Graph& base, std::size_t degree, std::vector<Permutation> permutations);

/// Throws std::invalid_argument unless `va` matches `base`: r = 1 - χ(base)
/// entries, edges equal to spanning_tree_split(base), every permutation a
/// bijection of {0..d-1}.
void check_voltage(const Graph& base, const VoltageAssignment& va);

/// Builds the degree-d cover. Vertex v_i (copy i of v) gets id i*|V(base)|+v,
/// so sheet 0 carries the base's own ids.
CoveringMap build_cover(const Graph& base, const VoltageAssignment& va);

struct CoverCheck {
  bool ok = false;
  std::optional<Vertex> violating_vertex;  // vertex of the total graph
  std::string message;
};

/// Surjectivity plus, at every vertex of the total graph, a bijection between
/// its neighbours and the neighbours of its image. Throws std::invalid_argument
/// when vertex_map has the wrong length.
CoverCheck validate_covering(const CoveringMap& cm);

/// Common fiber size. Requires both graphs connected; throws
/// std::invalid_argument otherwise and std::logic_error on unequal fibers.
std::size_t covering_degree(const CoveringMap& cm);

/// Refines total and base separately and checks that every vertex of the
/// total graph carries its image's colour in every round.
CoverCheck lift_check(const CoveringMap& cm);

/// Finite ball of the universal cover, as a rooted tree of non-backtracking
/// walks from `root`. Node 0 is the root.
struct RootedTreeBall {
  std::vector<std::size_t> parent;        // parent[0] == node 0
  std::vector<std::vector<std::size_t>> children;
  std::vector<std::size_t> depth;
  std::vector<Vertex> base_vertex;        // endpoint of the walk
  std::size_t radius = 0;

  std::size_t size() const { return parent.size(); }
  Graph to_graph() const;
};

RootedTreeBall universal_cover_ball(const Graph& g, Vertex root, std::size_t radius);

/// Bracket encoding: "(" + sorted child codes + ")". Equal codes iff the
/// rooted trees are isomorphic. Throws std::invalid_argument on a malformed
/// tree.
std::string rooted_tree_canonical(const RootedTreeBall& t);
std::string rooted_tree_canonical(const Graph& tree, Vertex root);

/// Rooted at the centre (minimum over both centres for bicentral trees), so
/// equal codes iff the free trees are isomorphic.
std::string tree_canonical(const Graph& tree);

/// Interned rooted-tree types. Two interned ids are equal iff the trees are
/// isomorphic; ids are only meaningful within one interner.
class TreeCodeInterner {
 public:
  std::size_t intern(std::vector<std::size_t> child_codes);
  std::size_t size() const { return table_.size(); }

 private:
  struct VectorHash {
    std::size_t operator()(const std::vector<std::size_t>& v) const;
  };
  std::unordered_map<std::vector<std::size_t>, std::size_t, VectorHash> table_;
};

/// Isomorphism type of universal_cover_ball(g, root, radius) without
/// materializing the ball; memoized over (vertex, arrival vertex, depth).
class BallCoder {
 public:
  BallCoder(const Graph& g, TreeCodeInterner& interner) : g_(g), interner_(interner) {}

  std::size_t code(Vertex root, std::size_t radius);

 private:
  std::size_t branch(Vertex v, Vertex from, std::size_t remaining);

  const Graph& g_;
  TreeCodeInterner& interner_;
  std::unordered_map<std::size_t, std::size_t> memo_;
};

}  // namespace wlcovers
