#include "wlcovers/cover_iso.hpp"

#include <deque>
#include <stdexcept>

#include "wlcovers/refine.hpp"

namespace wlcovers {

namespace {

constexpr Vertex kUnmapped = static_cast<Vertex>(-1);

void require_same_base(const CoveringMap& src, const CoveringMap& dst) {
  if (!(src.base == dst.base)) throw std::invalid_argument("covers have different base graphs");
}

std::optional<std::vector<Vertex>> extend_unchecked(const CoveringMap& src, const CoveringMap& dst,
                                                    std::pair<Vertex, Vertex> seed) {
  if (src.total.vertex_count() != dst.total.vertex_count()) return std::nullopt;
  const auto [from, to] = seed;
  const std::size_t n = src.total.vertex_count();
  std::vector<Vertex> phi(n, kUnmapped);
  std::vector<bool> used(n, false);
  phi[from] = to;
  used[to] = true;
  std::deque<Vertex> queue{from};
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    const Vertex image = phi[v];
    for (Vertex u : src.total.neighbors(v)) {
      const Vertex over = src.vertex_map[u];
      Vertex forced = kUnmapped;
      for (Vertex w : dst.total.neighbors(image)) {
        if (dst.vertex_map[w] == over) {
          forced = w;
          break;
        }
      }
      if (forced == kUnmapped) return std::nullopt;
      if (phi[u] != kUnmapped) {
        if (phi[u] != forced) return std::nullopt;
        continue;
      }
      if (used[forced]) return std::nullopt;
      phi[u] = forced;
      used[forced] = true;
      queue.push_back(u);
    }
  }
  // Connected source: every vertex is mapped, and injectivity was enforced.
  if (!is_isomorphism(src.total, dst.total, phi)) return std::nullopt;
  return phi;
}

}  // namespace

std::optional<std::vector<Vertex>> extend_cover_morphism(const CoveringMap& src, const CoveringMap& dst,
                                                         std::pair<Vertex, Vertex> seed) {
  require_same_base(src, dst);
  const auto [from, to] = seed;
  if (from >= src.total.vertex_count() || to >= dst.total.vertex_count()) {
    throw std::invalid_argument("extend_cover_morphism: seed out of range");
  }
  if (src.vertex_map[from] != dst.vertex_map[to]) {
    throw std::invalid_argument("extend_cover_morphism: seed vertices lie over different base vertices");
  }
  if (!is_connected(src.total) || !is_connected(dst.total)) {
    throw std::invalid_argument("extend_cover_morphism: total graphs must be connected");
  }
  return extend_unchecked(src, dst, seed);
}

CoverIsoResult covers_isomorphic(const CoveringMap& src, const CoveringMap& dst) {
  require_same_base(src, dst);
  const std::size_t d_src = covering_degree(src);
  const std::size_t d_dst = covering_degree(dst);
  if (d_src != d_dst) {
    return {false, std::nullopt,
            "degree mismatch: " + std::to_string(d_src) + " vs " + std::to_string(d_dst)};
  }
  if (src.total.vertex_count() == 0) return {true, std::vector<Vertex>{}, "empty covers"};
  const Vertex anchor = 0;
  for (Vertex candidate : dst.fiber(src.vertex_map[anchor])) {
    // Seeds share a fiber and covering_degree checked connectivity.
    if (auto phi = extend_unchecked(src, dst, {anchor, candidate})) {
      return {true, std::move(phi), "extended from seed (0," + std::to_string(candidate) + ")"};
    }
  }
  return {false, std::nullopt, "no seed in the fiber extends to a cover isomorphism"};
}

IsoAgreement graph_iso_equals_cover_iso_check(const CoveringMap& src, const CoveringMap& dst,
                                              std::size_t max_vertices) {
  if (!is_discrete(src.base)) {
    throw std::invalid_argument("graph_iso_equals_cover_iso_check: base colouring is not discrete");
  }
  IsoAgreement out;
  out.cover_isomorphic = covers_isomorphic(src, dst).isomorphic;
  out.graph_isomorphic = graphs_isomorphic(src.total, dst.total, max_vertices).has_value();
  return out;
}

}  // namespace wlcovers
