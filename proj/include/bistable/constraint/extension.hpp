#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <variant>
#include <vector>

#include "bistable/constraint/coupling_system.hpp"

namespace bistable {

/// Raised when a region's boundary uses free edges.
class RegionBoundaryError : public std::invalid_argument {
  public:
    RegionBoundaryError(const std::string& what, std::vector<std::size_t> free_edges)
        : std::invalid_argument(what), free_edges_(std::move(free_edges)) {}
    [[nodiscard]] const std::vector<std::size_t>& free_edges() const { return free_edges_; }

  private:
    std::vector<std::size_t> free_edges_;
};

struct ZeroExtension {};
struct RandomExtension {
    std::uint64_t seed = 0;
};
/// Explicit values on free edges; unlisted free edges are 0.
using ExplicitExtension = std::map<std::size_t, bool>;
using ExtensionChoice = std::variant<ZeroExtension, RandomExtension, ExplicitExtension>;

/// Effective coupling extended to every edge of X, with curvature μ = δc̃.
struct ExtendedCoupling {
    std::shared_ptr<const CouplingSystem> base;
    BitVector values;
    BitVector curvature;

    [[nodiscard]] std::vector<std::size_t> frustrated_faces() const { return curvature.support(); }
};

/// Throws when an explicit assignment names a constraint edge.
[[nodiscard]] ExtendedCoupling extend_coupling(const CouplingSystem& sys, const ExtensionChoice& choice);

/// Σ_{f∈D} μ(f), after checking it equals Σ_{e∈∂D} c_eff(e). Throws
/// RegionBoundaryError listing the free edges of ∂D.
[[nodiscard]] bool total_curvature(const ExtendedCoupling& ext, const std::vector<std::size_t>& faces);

/// Toggles the extension on a free edge; μ changes on its incident faces.
/// Throws when the edge is a constraint edge.
[[nodiscard]] ExtendedCoupling move_defect(const ExtendedCoupling& ext, std::size_t free_edge);

/// Free edges of ∂D (empty when D is admissible).
[[nodiscard]] std::vector<std::size_t> free_boundary_edges(const CouplingSystem& sys,
                                                           const std::vector<std::size_t>& faces);

} // namespace bistable
