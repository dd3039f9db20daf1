#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bistable/complex/cell_complex.hpp"

namespace bistable {

/// Closed subcomplex of a CellComplex, stored as cell masks. The parent is
/// not retained; callers pass it alongside.
class Subcomplex {
  public:
    Subcomplex() = default;
    /// Throws std::invalid_argument when a selected cell has a boundary cell
    /// outside the masks or the mask lengths do not match X.
    Subcomplex(const CellComplex& x, BitVector vertices, BitVector edges, BitVector faces);

    static Subcomplex empty(const CellComplex& x);
    static Subcomplex of_vertices(const CellComplex& x, std::span<const std::size_t> vertices);
    /// Smallest subcomplex containing the selected edges.
    static Subcomplex closure_of_edges(const CellComplex& x, const BitVector& edges);
    /// Closure of the mod-2 boundary of a face set.
    static Subcomplex boundary_of(const CellComplex& x, std::span<const std::size_t> faces);
    /// Edges lying in exactly one face, with their endpoints.
    static Subcomplex surface_boundary(const CellComplex& x);

    [[nodiscard]] const BitVector& vertices() const { return vertices_; }
    [[nodiscard]] const BitVector& edges() const { return edges_; }
    [[nodiscard]] const BitVector& faces() const { return faces_; }
    /// Mask of k-cells, k in {0, 1, 2}.
    [[nodiscard]] const BitVector& mask(int k) const;
    [[nodiscard]] bool is_empty() const { return vertices_.none(); }

    friend bool operator==(const Subcomplex&, const Subcomplex&) = default;

  private:
    BitVector vertices_;
    BitVector edges_;
    BitVector faces_;
};

} // namespace bistable
