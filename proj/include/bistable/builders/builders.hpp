#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bistable/constraint/coupling_system.hpp"

namespace bistable {

/// Builder request: a kind name and integer parameters (flags are 0/1).
struct SystemSpec {
    std::string kind;
    std::map<std::string, std::int64_t> params;
    Pins pins;                           // necker_grid only
    std::vector<std::size_t> twist_edges; // mobius_ring only; empty = default
};

struct BuilderInfo {
    std::string kind;
    std::vector<std::string> params;
    std::string summary;
};

/// Every kind accepted by build_system.
[[nodiscard]] const std::vector<BuilderInfo>& builder_catalog();

/// Dispatches on spec.kind. Throws std::invalid_argument for unknown kinds,
/// unknown or out-of-range parameters, and overlapping pins.
[[nodiscard]] CouplingSystem build_system(const SystemSpec& spec);

/// n-cycle, edge i joins i and i+1 mod n, every edge opposes.
[[nodiscard]] CouplingSystem gear_ring(std::size_t n);

/// N x M quad torus. Vertex (i, j) is i*M + j; horizontal edge h(i,j) =
/// i*M + j joins (i,j),(i,j+1); vertical edge v(i,j) = N*M + i*M + j joins
/// (i,j),(i+1,j). Face i*M + j walks h(i,j), v(i,j+1), h(i+1,j), v(i,j).
[[nodiscard]] CouplingSystem gear_torus(std::size_t rows, std::size_t cols);
/// Row 0 horizontal cycle and column 0 vertical cycle.
[[nodiscard]] std::pair<EdgeWalk, EdgeWalk> torus_generators(std::size_t rows, std::size_t cols);
/// Cocycles dual to the generators: α = Σ_i h(i, M-1), β = Σ_j v(N-1, j).
[[nodiscard]] std::pair<BitVector, BitVector> torus_generator_cocycles(std::size_t rows, std::size_t cols);

/// Opposing ring with frame twist on the given edges (default: edge n-1).
[[nodiscard]] CouplingSystem mobius_ring(std::size_t n, std::vector<std::size_t> twist_edges = {});
/// Agreeing ring with a single frame twist on edge n-1.
[[nodiscard]] CouplingSystem spinning_necker_ring(std::size_t n);

/// Path with n edges on vertices 0..n, agreeing, endpoints pinned to a, b.
[[nodiscard]] CouplingSystem necker_path(std::size_t n, bool a = false, bool b = true);

/// w x h grid, vertex x + y*w, horizontal edges then vertical, square faces,
/// agreeing couplings.
[[nodiscard]] CouplingSystem necker_grid(std::size_t w, std::size_t h, Pins pins = {});

/// Brick-wall hexagonal patch on a w x h vertex array (vertex x + y*w);
/// vertical edges where x + y is even; hexagonal faces; opposing couplings.
/// With pin_boundary, even-class vertices of the left column are pinned to 0
/// and even-class vertices of the right column to 1.
[[nodiscard]] CouplingSystem lozenge_patch(std::size_t w, std::size_t h, bool pin_boundary = false);

/// Opposing 5-cycle 0..4 filled by five triangles around a free centre 5.
[[nodiscard]] CouplingSystem p3_rosette();

/// {7,3} patch grown r rings of heptagons around face 0, opposing.
[[nodiscard]] CouplingSystem heptagonal_patch(std::size_t radius);

[[nodiscard]] CouplingSystem dodecahedral_sphere();
[[nodiscard]] CouplingSystem truncated_icosahedral_sphere();

/// Three k x k quad meshes (planes XY, YZ, ZX; vertex plane*k*k + a*k + b)
/// glued by bevel quads along the three seams, with one corner triangle.
/// Every edge opposes.
[[nodiscard]] CouplingSystem gear_corner(std::size_t k);
/// The three vertices of the corner triangle.
[[nodiscard]] std::vector<std::size_t> gear_corner_vertices(std::size_t k);

/// Six-vertex real projective plane; coupling = first H¹ representative.
[[nodiscard]] CouplingSystem rp2_minimal();

/// Flux boards: closed sphere triangulations with zero couplings.
[[nodiscard]] CouplingSystem icosahedron();
[[nodiscard]] CouplingSystem tetrahedron();

/// Surface of the m-gonal prism: two m-gon caps and m squares.
[[nodiscard]] CouplingSystem prism(std::size_t m);

} // namespace bistable
