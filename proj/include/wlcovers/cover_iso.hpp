#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wlcovers/covers.hpp"

namespace wlcovers {

/// Extends the seed map src_seed -> dst_seed to a cover isomorphism.
///
/// A cover morphism between connected covers is determined by one value:
/// each neighbour u of a mapped vertex v must go to the unique neighbour of
/// phi(v) lying over the image of u. The extension is forced breadth-first
/// and abandoned at the first conflict. Returns the full map when it is a
/// graph isomorphism commuting with both projections.
///
/// Throws std::invalid_argument if the seeds lie over different base
/// vertices, the bases differ, or a total graph is disconnected.
std::optional<std::vector<Vertex>> extend_cover_morphism(const CoveringMap& src, const CoveringMap& dst,
                                                         std::pair<Vertex, Vertex> seed);

struct CoverIsoResult {
  bool isomorphic = false;
  std::optional<std::vector<Vertex>> witness;
  std::string diagnostic;
};

/// Tries every seed in the fiber of dst over the base image of src vertex 0.
/// Degree mismatch returns false with a diagnostic; a base mismatch throws.
CoverIsoResult covers_isomorphic(const CoveringMap& src, const CoveringMap& dst);

struct IsoAgreement {
  bool cover_isomorphic = false;
  bool graph_isomorphic = false;

  bool agree() const { return cover_isomorphic == graph_isomorphic; }
};

/// Computes cover isomorphism and plain graph isomorphism side by side. Over
/// a base with a discrete stable colouring the two coincide. Refuses (throws
/// std::invalid_argument) when the base is not discrete.
IsoAgreement graph_iso_equals_cover_iso_check(const CoveringMap& src, const CoveringMap& dst,
                                              std::size_t max_vertices = 64);

}  // namespace wlcovers
