#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bistable/complex/cell_complex.hpp"
#include "bistable/complex/subcomplex.hpp"

namespace bistable {

using Pins = std::map<std::size_t, bool>;

/// Constraint graph G inside the 1-skeleton of an ambient complex, with a
/// coupling cochain (0 = agree, 1 = oppose), optional frame twist and
/// optional pinned vertex values. Cochains are stored as full-length edge
/// vectors whose support lies in G.
class CouplingSystem {
  public:
    /// Validates masks and pins; throws std::invalid_argument with a reason.
    CouplingSystem(std::shared_ptr<const CellComplex> ambient, BitVector constraint_edges, BitVector coupling,
                   std::optional<BitVector> twist = std::nullopt, Pins pinned = {}, std::string name = {});

    [[nodiscard]] const CellComplex& ambient() const { return *ambient_; }
    [[nodiscard]] const std::shared_ptr<const CellComplex>& ambient_ptr() const { return ambient_; }
    [[nodiscard]] const BitVector& constraint_edges() const { return constraint_; }
    [[nodiscard]] const BitVector& coupling() const { return coupling_; }
    [[nodiscard]] const std::optional<BitVector>& twist() const { return twist_; }
    [[nodiscard]] const Pins& pinned() const { return pinned_; }
    [[nodiscard]] const std::string& name() const { return name_; }

    [[nodiscard]] BitVector twist_or_zero() const;
    /// c XOR ω.
    [[nodiscard]] BitVector effective_coupling() const;
    [[nodiscard]] bool is_constraint(std::size_t e) const { return constraint_.get(e); }
    /// Subcomplex of pinned vertices.
    [[nodiscard]] Subcomplex pinned_subcomplex() const;

    [[nodiscard]] CouplingSystem with_pins(Pins pins) const;
    [[nodiscard]] CouplingSystem with_coupling(BitVector coupling) const;

  private:
    std::shared_ptr<const CellComplex> ambient_;
    BitVector constraint_;
    BitVector coupling_;
    std::optional<BitVector> twist_;
    Pins pinned_;
    std::string name_;
};

/// The constraint graph as a complex of its own: same vertices, only the
/// constraint edges (renumbered in increasing order), no faces.
struct ConstraintGraph {
    CellComplex graph;
    std::vector<std::size_t> ambient_edge; // graph edge -> ambient edge
    std::map<std::size_t, std::size_t> graph_edge; // ambient edge -> graph edge

    [[nodiscard]] BitVector to_graph(const BitVector& ambient_cochain) const;
    [[nodiscard]] BitVector to_ambient(const BitVector& graph_cochain, std::size_t ambient_edges) const;
};
[[nodiscard]] ConstraintGraph constraint_graph(const CouplingSystem& sys);

/// XOR of the effective coupling along a closed walk in G. Throws when the
/// walk is open or uses a free edge.
[[nodiscard]] bool holonomy(const CouplingSystem& sys, const EdgeWalk& cycle);

struct TwistDecomposition {
    bool flat = false;  // Σ c
    bool twist = false; // Σ ω
    bool total = false; // Σ (c + ω)
};
[[nodiscard]] TwistDecomposition twist_decompose(const CouplingSystem& sys, const EdgeWalk& cycle);

/// System with the given vertices and every edge touching them removed from
/// the constraint graph (their pins are dropped).
[[nodiscard]] CouplingSystem without_vertices(const CouplingSystem& sys, const std::set<std::size_t>& vertices);

} // namespace bistable
