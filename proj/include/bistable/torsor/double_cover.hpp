#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bistable/constraint/coupling_system.hpp"

namespace bistable {

/// Two-sheeted cover of the constraint graph presented by c_eff. Lifted
/// vertex (sheet, v) has index sheet * V + v. Constraint edge number i (in
/// increasing ambient order) lifts to lifted edges 2i and 2i+1, which start
/// on sheets 0 and 1 at the lower-index endpoint and cross sheets when
/// c_eff = 1.
struct DoubleCover {
    std::size_t base_vertices = 0;
    CellComplex lifted;
    std::vector<std::size_t> base_edge; // lifted edge -> ambient edge
    BitVector coupling;                 // effective coupling on ambient edges
    BitVector constraint_edges;

    [[nodiscard]] std::size_t lift(std::size_t v, bool sheet) const { return (sheet ? base_vertices : 0) + v; }
    [[nodiscard]] std::size_t project(std::size_t lifted_vertex) const { return lifted_vertex % base_vertices; }
    [[nodiscard]] bool sheet(std::size_t lifted_vertex) const { return lifted_vertex >= base_vertices; }
    /// Swaps the sheets of a lifted vertex.
    [[nodiscard]] std::size_t deck(std::size_t lifted_vertex) const {
        return sheet(lifted_vertex) ? lifted_vertex - base_vertices : lifted_vertex + base_vertices;
    }
};

/// Throws when the constraint graph has no edges.
[[nodiscard]] DoubleCover build_cover(const CouplingSystem& sys);

/// Component label per lifted vertex.
[[nodiscard]] std::vector<std::size_t> cover_components(const DoubleCover& cover);

/// Cover restricted to one connected component of the base graph.
struct ComponentTriviality {
    std::vector<std::size_t> base_vertices;
    bool trivial = false;
    /// When trivial: sheet of each base vertex on the component through
    /// (base_vertices.front(), sheet 0), and its deck image. Bits are indexed
    /// by base vertex; vertices off the component are 0.
    std::optional<std::pair<BitVector, BitVector>> sections;
};

/// One report per component of the base graph that has at least one edge.
[[nodiscard]] std::vector<ComponentTriviality> cover_triviality(const DoubleCover& cover);

/// Lifts a closed base walk from sheet 0; the lifted vertex sequence.
[[nodiscard]] std::vector<std::size_t> lift_walk(const DoubleCover& cover, const EdgeWalk& walk, bool start_sheet = false);

/// 0 if the lift from sheet 0 closes, 1 if it ends on sheet 1. Throws for
/// open walks or walks leaving the constraint graph.
[[nodiscard]] bool monodromy(const DoubleCover& cover, const EdgeWalk& loop);

/// For covers of one constraint graph whose couplings differ by δξ, the
/// lifted-vertex bijection (v, s) -> (v, s + ξ(v)), checked to carry edges to
/// edges. nullopt when no such ξ exists.
[[nodiscard]] std::optional<std::vector<std::size_t>> cover_isomorphism(const DoubleCover& a, const DoubleCover& b);

} // namespace bistable
