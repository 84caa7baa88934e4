#include "wlcovers/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "wlcovers/refine.hpp"

namespace wlcovers {

Graph Graph::from_edge_list(std::size_t vertex_count, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.assign(vertex_count, {});
  for (const Edge& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") has an endpoint outside [0," + std::to_string(vertex_count) + ")");
    }
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  std::size_t twice_edges = 0;
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    twice_edges += nbrs.size();
  }
  g.edge_count_ = twice_edges / 2;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= adjacency_.size()) return false;
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

DisjointUnion disjoint_union(const Graph& g, const Graph& h) {
  const std::size_t offset = g.vertex_count();
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : h.edges()) edges.push_back({e.u + offset, e.v + offset});
  return {Graph::from_edge_list(offset + h.vertex_count(), edges), offset};
}

VertexPartition connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  VertexPartition out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> group;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      group.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    std::sort(group.begin(), group.end());
    out.groups.push_back(std::move(group));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::int64_t euler_characteristic(const Graph& g) {
  return static_cast<std::int64_t>(g.vertex_count()) - static_cast<std::int64_t>(g.edge_count());
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph::from_edge_list(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edge_list(n, edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.vertex_count()) throw GraphError("relabel: permutation size mismatch");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Graph::from_edge_list(g.vertex_count(), edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::size_t> position(g.vertex_count(), SIZE_MAX);
  for (std::size_t i = 0; i < vertices.size(); ++i) position[vertices[i]] = i;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex u : g.neighbors(vertices[i])) {
      if (position[u] != SIZE_MAX && i < position[u]) edges.push_back({i, position[u]});
    }
  }
  return Graph::from_edge_list(vertices.size(), edges);
}

bool is_isomorphism(const Graph& g, const Graph& h, std::span<const Vertex> phi) {
  const std::size_t n = g.vertex_count();
  if (h.vertex_count() != n || phi.size() != n || g.edge_count() != h.edge_count()) return false;
  std::vector<bool> hit(n, false);
  for (Vertex v : phi) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  // Equal edge counts plus an injective edge map give preservation both ways.
  for (const Edge& e : g.edges()) {
    if (!h.has_edge(phi[e.u], phi[e.v])) return false;
  }
  return true;
}

namespace {

// Individualization-refinement search on the joint colouring of g ⊕ h.
class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h)
      : n_(g.vertex_count()), g_(g), h_(h), joint_(disjoint_union(g, h).graph) {}

  std::optional<std::vector<Vertex>> run() {
    Coloring constant{std::vector<Color>(2 * n_, 0)};
    return search(stable_coloring(joint_, constant));
  }

 private:
  std::optional<std::vector<Vertex>> search(const Coloring& c) {
    if (histogram(c, 0, n_) != histogram(c, n_, 2 * n_)) return std::nullopt;

    const std::size_t classes = c.class_count();
    std::vector<std::vector<Vertex>> g_cells(classes), h_cells(classes);
    for (Vertex v = 0; v < n_; ++v) g_cells[c.colors[v]].push_back(v);
    for (Vertex v = 0; v < n_; ++v) h_cells[c.colors[n_ + v]].push_back(v);

    // Smallest non-singleton cell, ties broken by colour id.
    std::optional<Color> target;
    for (Color k = 0; k < classes; ++k) {
      if (g_cells[k].size() > 1 && (!target || g_cells[k].size() < g_cells[*target].size())) {
        target = k;
      }
    }
    if (!target) {
      std::vector<Vertex> phi(n_);
      for (Color k = 0; k < classes; ++k) phi[g_cells[k][0]] = h_cells[k][0];
      if (is_isomorphism(g_, h_, phi)) return phi;
      return std::nullopt;
    }

    const Vertex pivot = g_cells[*target][0];
    for (Vertex candidate : h_cells[*target]) {
      Coloring next = c;
      next.colors[pivot] = classes;
      next.colors[n_ + candidate] = classes;
      if (auto phi = search(stable_coloring(joint_, next))) return phi;
    }
    return std::nullopt;
  }

  std::size_t n_;
  const Graph& g_;
  const Graph& h_;
  Graph joint_;
};

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<std::vector<Vertex>> graphs_isomorphic(const Graph& g, const Graph& h,
                                                     std::size_t max_vertices) {
  if (g.vertex_count() > max_vertices || h.vertex_count() > max_vertices) {
    throw SizeGuardExceeded("graphs_isomorphic: " + std::to_string(std::max(g.vertex_count(), h.vertex_count())) +
                            " vertices exceeds the guard of " + std::to_string(max_vertices));
  }
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (degree_sequence(g) != degree_sequence(h)) return std::nullopt;
  if (g.vertex_count() == 0) return std::vector<Vertex>{};
  return IsoSearch(g, h).run();
}

}  // namespace wlcovers
