#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bistable/cohomology/cohomology.hpp"
#include "bistable/constraint/sections.hpp"

namespace bistable {

enum class Level { Ambiguity, Conflict, Impossibility, Curvature, Inaccessibility };

[[nodiscard]] std::string to_string(Level level);

/// A face set D whose boundary lies in G and carries odd holonomy.
struct FrustratedRegion {
    std::vector<std::size_t> faces;
};

using Witness = std::variant<std::monostate, OddCycle, PinClash, FrustratedRegion>;

struct Classification {
    Level level = Level::Ambiguity;
    Witness witness;
    /// Dimensions of the groups consulted, e.g. "H0(G)", "H1(G)", "H1(G,A)".
    std::map<std::string, std::size_t> groups;
    /// log2 of the number of global sections; set for Ambiguity.
    std::optional<std::size_t> section_count_log2;
    /// Coordinates of [c_eff] in H¹(G).
    BitVector coupling_class;
    /// δ* of the pin data in H¹(G, A); set when pins are present and G has no
    /// odd cycle.
    std::optional<RelativeClass> relative_class;
    /// Pin clash found alongside a more severe verdict.
    std::optional<PinClash> secondary_conflict;
    /// Odd cycle found alongside a Curvature verdict.
    std::optional<OddCycle> secondary_impossibility;
};

/// Impossibility if some cycle of G has holonomy 1, else Conflict if the pins
/// clash under transport, else Ambiguity. With a region D (∂D ⊆ G) whose
/// boundary holonomy is 1 the verdict is Curvature, witnessed by D.
/// Inaccessibility is decided by the flux module and never returned here.
[[nodiscard]] Classification classify(const CouplingSystem& sys,
                                      const std::optional<std::vector<std::size_t>>& region = std::nullopt);

/// Holonomy of c_eff around ∂D. Throws RegionBoundaryError if ∂D leaves G.
[[nodiscard]] bool boundary_holonomy(const CouplingSystem& sys, const std::vector<std::size_t>& faces);

} // namespace bistable
