#include "wlcovers/covers.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

#include "wlcovers/refine.hpp"

namespace wlcovers {

bool is_permutation_of_size(const Permutation& p, std::size_t d) {
  if (p.size() != d) return false;
  std::vector<bool> hit(d, false);
  for (std::size_t x : p) {
    if (x >= d || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

std::vector<Vertex> CoveringMap::fiber(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex x = 0; x < vertex_map.size(); ++x) {
    if (vertex_map[x] == v) out.push_back(x);
  }
  return out;
}

SpanningTreeSplit spanning_tree_split(const Graph& base) {
  SpanningTreeSplit split;
  const std::size_t n = base.vertex_count();
  if (n == 0) return split;
  std::vector<bool> seen(n, false);
  std::vector<Edge> tree;
  std::deque<Vertex> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : base.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = true;
        tree.push_back({std::min(u, v), std::max(u, v)});
        queue.push_back(u);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw std::invalid_argument("spanning_tree_split: base graph is disconnected");
  }
  std::sort(tree.begin(), tree.end());
  for (const Edge& e : base.edges()) {
    if (!std::binary_search(tree.begin(), tree.end(), e)) split.distinguished_edges.push_back(e);
  }
  split.tree_edges = std::move(tree);
  return split;
}

VoltageAssignment make_voltage(const Graph& base, std::size_t degree, std::vector<Permutation> permutations) {
  VoltageAssignment va{degree, spanning_tree_split(base).distinguished_edges, std::move(permutations)};
  check_voltage(base, va);
  return va;
}

void check_voltage(const Graph& base, const VoltageAssignment& va) {
  if (va.degree < 1) throw std::invalid_argument("voltage assignment: degree must be at least 1");
  const std::vector<Edge> expected = spanning_tree_split(base).distinguished_edges;
  if (va.distinguished_edges.size() != expected.size()) {
    throw std::invalid_argument("voltage assignment: expected " + std::to_string(expected.size()) +
                                " distinguished edges (1 - euler characteristic), got " +
                                std::to_string(va.distinguished_edges.size()));
  }
  if (va.distinguished_edges != expected) {
    throw std::invalid_argument("voltage assignment: distinguished edges differ from the BFS spanning-tree complement");
  }
  if (va.permutations.size() != expected.size()) {
    throw std::invalid_argument("voltage assignment: " + std::to_string(va.permutations.size()) +
                                " permutations for " + std::to_string(expected.size()) + " edges");
  }
  for (std::size_t k = 0; k < va.permutations.size(); ++k) {
    if (!is_permutation_of_size(va.permutations[k], va.degree)) {
      throw std::invalid_argument("voltage assignment: entry " + std::to_string(k) +
                                  " is not a permutation of {0.." + std::to_string(va.degree - 1) + "}");
    }
  }
}

CoveringMap build_cover(const Graph& base, const VoltageAssignment& va) {
  check_voltage(base, va);
  const std::size_t n = base.vertex_count();
  const std::size_t d = va.degree;
  const SpanningTreeSplit split = spanning_tree_split(base);

  std::vector<Edge> edges;
  edges.reserve(d * base.edge_count());
  for (const Edge& e : split.tree_edges) {
    for (std::size_t i = 0; i < d; ++i) edges.push_back({i * n + e.u, i * n + e.v});
  }
  for (std::size_t k = 0; k < va.distinguished_edges.size(); ++k) {
    const Edge& e = va.distinguished_edges[k];
    const Permutation& sigma = va.permutations[k];
    for (std::size_t i = 0; i < d; ++i) edges.push_back({i * n + e.u, sigma[i] * n + e.v});
  }

  CoveringMap cm;
  cm.total = Graph::from_edge_list(d * n, edges);
  cm.base = base;
  cm.vertex_map.resize(d * n);
  for (Vertex x = 0; x < d * n; ++x) cm.vertex_map[x] = x % n;
  return cm;
}

CoverCheck validate_covering(const CoveringMap& cm) {
  const std::size_t n_total = cm.total.vertex_count();
  const std::size_t n_base = cm.base.vertex_count();
  if (cm.vertex_map.size() != n_total) {
    throw std::invalid_argument("validate_covering: vertex_map has " + std::to_string(cm.vertex_map.size()) +
                                " entries for " + std::to_string(n_total) + " vertices");
  }
  std::vector<bool> covered(n_base, false);
  for (Vertex x = 0; x < n_total; ++x) {
    if (cm.vertex_map[x] >= n_base) {
      return {false, x, "vertex " + std::to_string(x) + " maps outside the base"};
    }
    covered[cm.vertex_map[x]] = true;
  }
  for (Vertex v = 0; v < n_base; ++v) {
    if (!covered[v]) return {false, std::nullopt, "base vertex " + std::to_string(v) + " has an empty fiber"};
  }

  std::vector<Vertex> images;
  for (Vertex x = 0; x < n_total; ++x) {
    const Vertex image = cm.vertex_map[x];
    images.clear();
    for (Vertex y : cm.total.neighbors(x)) images.push_back(cm.vertex_map[y]);
    std::sort(images.begin(), images.end());
    const auto base_nbrs = cm.base.neighbors(image);
    if (!std::equal(images.begin(), images.end(), base_nbrs.begin(), base_nbrs.end())) {
      return {false, x,
              "neighbourhood of vertex " + std::to_string(x) + " is not mapped bijectively onto that of base vertex " +
                  std::to_string(image)};
    }
  }
  return {true, std::nullopt, "ok"};
}

std::size_t covering_degree(const CoveringMap& cm) {
  if (!is_connected(cm.total) || !is_connected(cm.base)) {
    throw std::invalid_argument("covering_degree: both graphs must be connected");
  }
  const std::size_t n_base = cm.base.vertex_count();
  if (n_base == 0) return 0;
  std::vector<std::size_t> fiber_size(n_base, 0);
  for (Vertex image : cm.vertex_map) ++fiber_size.at(image);
  const std::size_t d = fiber_size[0];
  for (Vertex v = 0; v < n_base; ++v) {
    if (fiber_size[v] != d) {
      throw std::logic_error("covering_degree: fibers over base vertices 0 and " + std::to_string(v) +
                             " differ in size (" + std::to_string(d) + " vs " + std::to_string(fiber_size[v]) + ")");
    }
  }
  if (cm.total.vertex_count() != d * n_base) throw std::logic_error("covering_degree: |V(total)| != d * |V(base)|");
  return d;
}

CoverCheck lift_check(const CoveringMap& cm) {
  const RefinementTrace total = color_refine(cm.total);
  const RefinementTrace base = color_refine(cm.base);
  const std::size_t rounds = std::min(total.rounds.size(), base.rounds.size());
  for (std::size_t r = 0; r < rounds; ++r) {
    for (Vertex x = 0; x < cm.total.vertex_count(); ++x) {
      if (total.rounds[r].colors[x] != base.rounds[r].colors[cm.vertex_map[x]]) {
        return {false, x,
                "round " + std::to_string(r) + ": vertex " + std::to_string(x) + " has colour " +
                    std::to_string(total.rounds[r].colors[x]) + " but its image has colour " +
                    std::to_string(base.rounds[r].colors[cm.vertex_map[x]])};
      }
    }
  }
  if (total.stable_round != base.stable_round) {
    return {false, std::nullopt,
            "refinement stabilizes at round " + std::to_string(total.stable_round) + " on the total graph but " +
                std::to_string(base.stable_round) + " on the base"};
  }
  return {true, std::nullopt, "ok"};
}

Graph RootedTreeBall::to_graph() const {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < parent.size(); ++i) edges.push_back({parent[i], i});
  return Graph::from_edge_list(parent.size(), edges);
}

RootedTreeBall universal_cover_ball(const Graph& g, Vertex root, std::size_t radius) {
  if (root >= g.vertex_count()) throw std::invalid_argument("universal_cover_ball: root out of range");
  RootedTreeBall ball;
  ball.radius = radius;
  ball.parent.push_back(0);
  ball.children.emplace_back();
  ball.depth.push_back(0);
  ball.base_vertex.push_back(root);

  // Nodes are appended in BFS order, so parent[i] < i for i > 0.
  for (std::size_t node = 0; node < ball.size(); ++node) {
    if (ball.depth[node] == radius) continue;
    const Vertex here = ball.base_vertex[node];
    const bool is_root = node == 0;
    const Vertex came_from = is_root ? here : ball.base_vertex[ball.parent[node]];
    for (Vertex next : g.neighbors(here)) {
      if (!is_root && next == came_from) continue;
      const std::size_t child = ball.size();
      ball.parent.push_back(node);
      ball.children.emplace_back();
      ball.depth.push_back(ball.depth[node] + 1);
      ball.base_vertex.push_back(next);
      ball.children[node].push_back(child);
    }
  }
  return ball;
}

namespace {

std::string encode(std::size_t node, const std::vector<std::vector<std::size_t>>& children) {
  std::vector<std::string> parts;
  for (std::size_t c : children[node]) parts.push_back(encode(c, children));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  out += ")";
  return out;
}

}  // namespace

std::string rooted_tree_canonical(const RootedTreeBall& t) {
  const std::size_t n = t.size();
  if (n == 0 || t.children.size() != n) throw std::invalid_argument("rooted_tree_canonical: malformed tree");
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t visited = 0;
  while (!stack.empty()) {
    const std::size_t node = stack.back();
    stack.pop_back();
    ++visited;
    for (std::size_t c : t.children[node]) {
      if (c >= n || seen[c] || t.parent[c] != node) {
        throw std::invalid_argument("rooted_tree_canonical: input is not a tree");
      }
      seen[c] = true;
      stack.push_back(c);
    }
  }
  if (visited != n) throw std::invalid_argument("rooted_tree_canonical: input is not a tree");
  return encode(0, t.children);
}

std::string rooted_tree_canonical(const Graph& tree, Vertex root) {
  const std::size_t n = tree.vertex_count();
  if (root >= n || tree.edge_count() + 1 != n || !is_connected(tree)) {
    throw std::invalid_argument("rooted_tree_canonical: input is not a tree");
  }
  std::vector<std::vector<std::size_t>> children(n);
  std::vector<bool> seen(n, false);
  std::deque<Vertex> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : tree.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = true;
        children[v].push_back(u);
        queue.push_back(u);
      }
    }
  }
  return encode(root, children);
}

std::string tree_canonical(const Graph& tree) {
  const std::size_t n = tree.vertex_count();
  if (n == 0) throw std::invalid_argument("tree_canonical: empty graph");
  if (tree.edge_count() + 1 != n || !is_connected(tree)) {
    throw std::invalid_argument("tree_canonical: input is not a tree");
  }
  // Peel leaves layer by layer until one or two centres remain.
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = tree.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex u : tree.neighbors(leaf)) {
        if (--deg[u] == 1) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (Vertex centre : layer) {
    std::string code = rooted_tree_canonical(tree, centre);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

std::size_t TreeCodeInterner::VectorHash::operator()(const std::vector<std::size_t>& v) const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (std::size_t x : v) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t TreeCodeInterner::intern(std::vector<std::size_t> child_codes) {
  std::sort(child_codes.begin(), child_codes.end());
  const auto [it, inserted] = table_.try_emplace(std::move(child_codes), table_.size());
  return it->second;
}

std::size_t BallCoder::code(Vertex root, std::size_t radius) {
  if (root >= g_.vertex_count()) throw std::invalid_argument("BallCoder: root out of range");
  // The root behaves like a branch arriving from a non-existent vertex.
  return branch(root, g_.vertex_count(), radius);
}

std::size_t BallCoder::branch(Vertex v, Vertex from, std::size_t remaining) {
  const std::size_t n = g_.vertex_count();
  const std::size_t key = (remaining * (n + 1) + from) * n + v;
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  std::vector<std::size_t> kids;
  if (remaining > 0) {
    for (Vertex u : g_.neighbors(v)) {
      if (u != from) kids.push_back(branch(u, v, remaining - 1));
    }
  }
  const std::size_t id = interner_.intern(std::move(kids));
  memo_.emplace(key, id);
  return id;
}

}  // namespace wlcovers
