#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "bistable/complex/cell_complex.hpp"

namespace bistable {

/// Ordered 2-simplex: vertices v[0] < v[1] < v[2] and the refined edges
/// joining (v0,v1), (v1,v2), (v0,v2) in that order.
struct Triangle {
    std::array<std::size_t, 3> v{};
    std::array<std::size_t, 3> e{};
};

/// Fan triangulation of a CellComplex. Vertices are shared with the parent
/// and ordered by index. Refined edges keep the parent's edges at the same
/// indices; fan diagonals follow.
struct DeltaComplex {
    CellComplex complex; // faces are the triangles as walks (e01, e12, e02)
    std::vector<Triangle> triangles;
    std::size_t parent_edge_count = 0;
    std::size_t parent_face_count = 0;
    BitMatrix pullback1; // refined edges x parent edges
    BitMatrix pullback2; // triangles x parent faces
};

/// Fans every face from its lowest-index vertex, following the face walk.
/// A fan diagonal p -> w receives the sum of the parent cochain along the
/// walk from p to w, and a face value is carried by the last triangle of its
/// fan, so pullback commutes with the coboundary.
/// Throws on faces shorter than three edges or with a repeated vertex.
[[nodiscard]] DeltaComplex triangulate(const CellComplex& x);

/// Pulls a parent k-cochain (k in {0, 1, 2}) back to the refinement.
[[nodiscard]] BitVector pull_back(const DeltaComplex& t, int k, const BitVector& cochain);

} // namespace bistable
