#include "bistable/constraint/classify.hpp"

#include "bistable/constraint/extension.hpp"

namespace bistable {

std::string to_string(Level level) {
    switch (level) {
    case Level::Ambiguity:
        return "Ambiguity";
    case Level::Conflict:
        return "Conflict";
    case Level::Impossibility:
        return "Impossibility";
    case Level::Curvature:
        return "Curvature";
    case Level::Inaccessibility:
        return "Inaccessibility";
    }
    return "Unknown";
}

bool boundary_holonomy(const CouplingSystem& sys, const std::vector<std::size_t>& faces) {
    auto free = free_boundary_edges(sys, faces);
    if (!free.empty()) {
        throw RegionBoundaryError("region boundary leaves the constraint graph", std::move(free));
    }
    return (sys.effective_coupling() & sys.ambient().region_boundary(faces)).parity();
}

Classification classify(const CouplingSystem& sys, const std::optional<std::vector<std::size_t>>& region) {
    Classification out;
    const auto g = constraint_graph(sys);
    const auto h0 = cohomology(g.graph, 0);
    const auto h1 = cohomology(g.graph, 1);
    out.groups["H0(G)"] = h0.dimension();
    out.groups["H1(G)"] = h1.dimension();
    out.coupling_class = h1.coordinates(g.to_graph(sys.effective_coupling()));

    const auto solved = solve_sections(sys);
    std::optional<OddCycle> odd;
    if (solved.obstruction) {
        if (const auto* cycle = std::get_if<OddCycle>(&*solved.obstruction)) {
            odd = *cycle;
        }
    }

    if (!odd && !sys.pinned().empty()) {
        const auto a = sys.pinned_subcomplex();
        // Any section of the unpinned system; the pins relative to it are
        // the H⁰(A) datum whose image under δ* decides conflict.
        const auto free = solve_sections(sys.with_pins({})).sections->particular;
        BitVector datum(g.graph.vertex_count());
        for (const auto& [v, bit] : sys.pinned()) {
            datum.set(v, bit != free.get(v));
        }
        out.relative_class = connecting(g.graph, a, 0, datum);
        out.groups["H1(G,A)"] = relative_cohomology(g.graph, a, 1).dimension();
    }

    std::optional<PinClash> clash;
    if (solved.obstruction) {
        if (const auto* pc = std::get_if<PinClash>(&*solved.obstruction)) {
            clash = *pc;
        }
    }

    if (region && boundary_holonomy(sys, *region)) {
        out.level = Level::Curvature;
        out.witness = FrustratedRegion{*region};
        out.secondary_impossibility = odd;
        out.secondary_conflict = clash;
        return out;
    }
    if (odd) {
        out.level = Level::Impossibility;
        out.witness = *odd;
        out.secondary_conflict = shortest_pin_clash(sys);
        return out;
    }
    if (clash) {
        out.level = Level::Conflict;
        out.witness = *clash;
        return out;
    }
    out.level = Level::Ambiguity;
    out.section_count_log2 = solved.sections->count_log2();
    return out;
}

} // namespace bistable
