#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wlcovers {

using Vertex = std::size_t;

/// Unordered vertex pair. Graph::edges() always reports u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Thrown when a graph would violate the simple-graph invariants.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are sorted and symmetric; there are no self-loops and no
/// parallel edges. Instances are immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from unordered pairs. Repeated pairs (in either
  /// orientation) collapse to one edge. Throws GraphError on an out-of-range
  /// endpoint or a self-loop.
  static Graph from_edge_list(std::size_t vertex_count, std::span<const Edge> edges);
  static Graph from_edge_list(std::size_t vertex_count, std::initializer_list<Edge> edges) {
    return from_edge_list(vertex_count, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Disjoint vertex groups whose union is the whole vertex set.
struct VertexPartition {
  std::vector<std::vector<Vertex>> groups;

  std::size_t size() const { return groups.size(); }
};

struct DisjointUnion {
  Graph graph;
  /// Id of the second operand's vertex 0 inside `graph`.
  std::size_t offset = 0;
};

DisjointUnion disjoint_union(const Graph& g, const Graph& h);

/// Maximal connected vertex sets; groups are sorted internally and ordered
/// by their minimum vertex.
VertexPartition connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// |V| - |E|.
std::int64_t euler_characteristic(const Graph& g);

/// Cycle graph C_n (n >= 3).
Graph cycle_graph(std::size_t n);
/// Path graph on n vertices.
Graph path_graph(std::size_t n);

/// Graph obtained by renaming vertex v to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Induced subgraph on `vertices`, renumbered in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Refused because the instance exceeds the configured size guard.
class SizeGuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Exact isomorphism test for small graphs.
///
/// Returns a bijection `phi` (phi[v] is the image of v in h) with
/// uv in E(g) iff phi(u)phi(v) in E(h), or nullopt when no such bijection
/// exists. The search prunes with joint colour refinement and individualizes
/// one vertex per branch. Graphs larger than `max_vertices` are refused with
/// SizeGuardExceeded instead of risking an unbounded search.
std::optional<std::vector<Vertex>> graphs_isomorphic(const Graph& g, const Graph& h,
                                                     std::size_t max_vertices = 64);

/// True iff `phi` is a bijection V(g) -> V(h) preserving edges both ways.
bool is_isomorphism(const Graph& g, const Graph& h, std::span<const Vertex> phi);

}  // namespace wlcovers
