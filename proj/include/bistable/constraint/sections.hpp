#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "bistable/constraint/coupling_system.hpp"

namespace bistable {

/// A closed walk in G with holonomy 1.
struct OddCycle {
    EdgeWalk cycle;
};

/// Two pinned vertices whose values disagree with transport along `path`.
struct PinClash {
    std::size_t source = 0;
    std::size_t target = 0;
    EdgeWalk path;
    bool transported = false; // value at target implied by the pin at source
};

using Obstruction = std::variant<OddCycle, PinClash>;

/// All solutions of δx = c_eff on G with x|_A = pins: `particular` plus any
/// sum of the `flips`, one per connected component of G without pins.
struct Sections {
    BitVector particular;
    std::vector<BitVector> flips;

    [[nodiscard]] std::size_t count_log2() const { return flips.size(); }
};

struct SolveResult {
    std::optional<Sections> sections;
    std::optional<Obstruction> obstruction;

    [[nodiscard]] bool solvable() const { return sections.has_value(); }
};

/// Breadth-first transport from the lowest vertex of each component. An odd
/// cycle is reported first (tree paths plus the lowest-index offending
/// non-tree edge); otherwise the shortest clashing pinned pair.
[[nodiscard]] SolveResult solve_sections(const CouplingSystem& sys);

/// Shortest clashing pinned pair, ignoring odd cycles (transport along BFS
/// shortest paths). nullopt when every pair is consistent.
[[nodiscard]] std::optional<PinClash> shortest_pin_clash(const CouplingSystem& sys);

/// True when x satisfies every constraint edge and every pin.
[[nodiscard]] bool is_section(const CouplingSystem& sys, const BitVector& x);

/// Breadth-first spanning forest of the graph formed by `edges`, rooted at
/// the lowest vertex of each component, neighbours in edge-index order.
[[nodiscard]] BitVector spanning_forest(const CellComplex& x, const BitVector& edges);

/// Gauge-fixes the effective coupling to zero on `forest` by tree transport
/// and returns the support of the resulting cohomologous cocycle. The forest
/// must be a spanning forest of G.
[[nodiscard]] BitVector seam(const CouplingSystem& sys, const BitVector& forest);

} // namespace bistable
