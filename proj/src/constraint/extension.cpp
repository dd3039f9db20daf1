#include "bistable/constraint/extension.hpp"

#include <random>
#include <string>

namespace bistable {

std::vector<std::size_t> free_boundary_edges(const CouplingSystem& sys, const std::vector<std::size_t>& faces) {
    for (auto f : faces) {
        if (f >= sys.ambient().face_count()) {
            throw std::invalid_argument("region: face " + std::to_string(f) + " out of range");
        }
    }
    return (sys.ambient().region_boundary(faces) & ~sys.constraint_edges()).support();
}

ExtendedCoupling extend_coupling(const CouplingSystem& sys, const ExtensionChoice& choice) {
    const auto& x = sys.ambient();
    BitVector values = sys.effective_coupling();
    if (const auto* random = std::get_if<RandomExtension>(&choice)) {
        std::mt19937_64 rng(random->seed);
        for (std::size_t e = 0; e < x.edge_count(); ++e) {
            const bool bit = (rng() & 1U) != 0;
            if (!sys.is_constraint(e)) {
                values.set(e, bit);
            }
        }
    } else if (const auto* given = std::get_if<ExplicitExtension>(&choice)) {
        for (const auto& [e, bit] : *given) {
            if (e >= x.edge_count()) {
                throw std::invalid_argument("extension: edge " + std::to_string(e) + " out of range");
            }
            if (sys.is_constraint(e)) {
                throw std::invalid_argument("extension: edge " + std::to_string(e) +
                                            " is a constraint edge; its value is fixed by the coupling");
            }
            values.set(e, bit);
        }
    }
    ExtendedCoupling ext{std::make_shared<const CouplingSystem>(sys), values, coboundary(x, 1, values)};
    return ext;
}

bool total_curvature(const ExtendedCoupling& ext, const std::vector<std::size_t>& faces) {
    const auto& sys = *ext.base;
    auto free = free_boundary_edges(sys, faces);
    if (!free.empty()) {
        std::string list;
        for (auto e : free) {
            list += (list.empty() ? "" : ",") + std::to_string(e);
        }
        throw RegionBoundaryError("total_curvature: region boundary uses free edges " + list, std::move(free));
    }
    if (coboundary(sys.ambient(), 1, ext.values) != ext.curvature) {
        throw std::logic_error("total_curvature: stored curvature is not the coboundary of the extension");
    }
    bool interior = false;
    for (auto f : faces) {
        interior = interior != ext.curvature.get(f);
    }
    const bool boundary = (sys.effective_coupling() & sys.ambient().region_boundary(faces)).parity();
    if (interior != boundary) {
        throw std::logic_error("total_curvature: discrete Stokes identity failed");
    }
    return interior;
}

ExtendedCoupling move_defect(const ExtendedCoupling& ext, std::size_t free_edge) {
    const auto& sys = *ext.base;
    if (free_edge >= sys.ambient().edge_count()) {
        throw std::invalid_argument("move_defect: edge out of range");
    }
    if (sys.is_constraint(free_edge)) {
        throw std::invalid_argument("move_defect: edge " + std::to_string(free_edge) +
                                    " is a constraint edge; defects cannot cross the constrained boundary");
    }
    auto out = ext;
    out.values.flip(free_edge);
    for (const auto& faces = sys.ambient().edge_faces(); auto f : faces[free_edge]) {
        out.curvature.flip(f);
    }
    return out;
}

} // namespace bistable
