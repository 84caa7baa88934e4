#include "wlcovers/refine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace wlcovers {

std::size_t Coloring::class_count() const {
  if (colors.empty()) return 0;
  return *std::max_element(colors.begin(), colors.end()) + 1;
}

ColorHistogram histogram(const Coloring& c) { return histogram(c, 0, c.colors.size()); }

ColorHistogram histogram(const Coloring& c, std::size_t begin, std::size_t end) {
  ColorHistogram out;
  for (std::size_t v = begin; v < end; ++v) ++out[c.colors[v]];
  return out;
}

namespace {

using Signature = std::pair<Color, std::vector<Color>>;

Coloring densify(const Coloring& c) {
  std::vector<Color> ids = c.colors;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  Coloring out;
  out.colors.reserve(c.colors.size());
  for (Color x : c.colors) {
    out.colors.push_back(static_cast<Color>(std::lower_bound(ids.begin(), ids.end(), x) - ids.begin()));
  }
  return out;
}

Coloring refine_once(const Graph& g, const Coloring& prev) {
  const std::size_t n = g.vertex_count();
  std::vector<Signature> sigs(n);
  for (Vertex v = 0; v < n; ++v) {
    auto& [own, nbrs] = sigs[v];
    own = prev.colors[v];
    nbrs.reserve(g.degree(v));
    for (Vertex u : g.neighbors(v)) nbrs.push_back(prev.colors[u]);
    std::sort(nbrs.begin(), nbrs.end());
  }
  std::vector<Signature> order = sigs;
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());

  Coloring next;
  next.colors.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    next.colors[v] = static_cast<Color>(std::lower_bound(order.begin(), order.end(), sigs[v]) - order.begin());
  }
  return next;
}

}  // namespace

RefinementTrace color_refine(const Graph& g, const std::optional<Coloring>& initial) {
  const std::size_t n = g.vertex_count();
  RefinementTrace trace;
  if (initial) {
    if (initial->colors.size() != n) {
      throw std::invalid_argument("color_refine: initial colouring has " + std::to_string(initial->colors.size()) +
                                  " entries for a graph with " + std::to_string(n) + " vertices");
    }
    trace.rounds.push_back(densify(*initial));
  } else {
    trace.rounds.push_back(Coloring{std::vector<Color>(n, 0)});
  }
  if (n == 0) return trace;

  // Each round refines the previous one, so equal class counts mean equal
  // partitions.
  while (true) {
    Coloring next = refine_once(g, trace.rounds.back());
    const bool stable = next.class_count() == trace.rounds.back().class_count();
    trace.rounds.push_back(std::move(next));
    if (stable) break;
  }
  trace.stable_round = trace.rounds.size() - 1;
  return trace;
}

Coloring stable_coloring(const Graph& g, const std::optional<Coloring>& initial) {
  return color_refine(g, initial).stable();
}

WLVerdict wl_test(const Graph& g, const Graph& h) {
  const auto [joint, offset] = disjoint_union(g, h);
  const RefinementTrace trace = color_refine(joint);
  const std::size_t total = joint.vertex_count();
  for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
    const Coloring& c = trace.rounds[r];
    if (histogram(c, 0, offset) != histogram(c, offset, total)) return {false, r};
  }
  return {true, std::nullopt};
}

bool is_discrete(const Graph& g) { return stable_coloring(g).class_count() == g.vertex_count(); }

namespace {

std::vector<Color> color_set(const Coloring& c, const std::vector<Vertex>& vertices) {
  std::vector<Color> out;
  for (Vertex v : vertices) out.push_back(c.colors[v]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct ColorSetGrouping {
  std::vector<std::vector<Color>> sets;
  std::vector<std::vector<std::size_t>> members;
};

// Groups components by colour set, asserting the equal-or-disjoint property.
ColorSetGrouping group_by_color_set(const Coloring& c, const VertexPartition& comps) {
  ColorSetGrouping out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    std::vector<Color> set = color_set(c, comps.groups[i]);
    bool placed = false;
    for (std::size_t k = 0; k < out.sets.size(); ++k) {
      if (out.sets[k] == set) {
        out.members[k].push_back(i);
        placed = true;
        break;
      }
      std::vector<Color> common;
      std::set_intersection(set.begin(), set.end(), out.sets[k].begin(), out.sets[k].end(),
                            std::back_inserter(common));
      if (!common.empty()) {
        throw std::logic_error("stable colour sets of two components overlap without being equal");
      }
    }
    if (!placed) {
      out.sets.push_back(std::move(set));
      out.members.push_back({i});
    }
  }
  return out;
}

}  // namespace

ComponentGrouping component_color_groups(const Graph& g) {
  ComponentGrouping out;
  out.components = connected_components(g);
  const Coloring c = stable_coloring(g);
  ColorSetGrouping grouped = group_by_color_set(c, out.components);
  for (std::size_t k = 0; k < grouped.sets.size(); ++k) {
    out.groups.push_back({std::move(grouped.members[k]), std::move(grouped.sets[k])});
  }
  return out;
}

DecompositionVerdict check_decomposition(const Graph& g, const Graph& h) {
  const auto [joint, offset] = disjoint_union(g, h);
  const Coloring c = stable_coloring(joint);
  const VertexPartition comps = connected_components(joint);
  const std::size_t g_component_count = connected_components(g).size();
  ColorSetGrouping grouped = group_by_color_set(c, comps);

  // Components of the union are ordered by minimum vertex, so g's components
  // come first and keep their own indices.
  DecompositionVerdict verdict;
  for (const auto& members : grouped.members) {
    DecompositionGroup group;
    for (std::size_t i : members) {
      const std::size_t order = comps.groups[i].size();
      if (comps.groups[i].front() < offset) {
        group.g_components.push_back(i);
        group.g_order += order;
      } else {
        group.h_components.push_back(i - g_component_count);
        group.h_order += order;
      }
    }
    verdict.groups.push_back(std::move(group));
  }

  for (std::size_t k = 0; k < verdict.groups.size(); ++k) {
    const DecompositionGroup& group = verdict.groups[k];
    std::string problem;
    if (group.g_components.empty()) {
      problem = "has components of the second graph only";
    } else if (group.h_components.empty()) {
      problem = "has components of the first graph only";
    } else if (group.g_order != group.h_order) {
      problem = "order mismatch " + std::to_string(group.g_order) + " != " + std::to_string(group.h_order);
    }
    if (!problem.empty()) {
      verdict.offending_group = k;
      verdict.message = "group " + std::to_string(k) + " " + problem;
      return verdict;
    }
  }
  verdict.passed = true;
  verdict.message = std::to_string(verdict.groups.size()) + " group(s), orders match";
  return verdict;
}

}  // namespace wlcovers
