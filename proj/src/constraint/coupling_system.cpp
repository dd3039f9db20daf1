#include "bistable/constraint/coupling_system.hpp"

#include <stdexcept>
#include <string>

namespace bistable {

CouplingSystem::CouplingSystem(std::shared_ptr<const CellComplex> ambient, BitVector constraint_edges,
                               BitVector coupling, std::optional<BitVector> twist, Pins pinned, std::string name)
    : ambient_(std::move(ambient)), constraint_(std::move(constraint_edges)), coupling_(std::move(coupling)),
      twist_(std::move(twist)), pinned_(std::move(pinned)), name_(std::move(name)) {
    if (!ambient_) {
        throw std::invalid_argument("coupling system: missing ambient complex");
    }
    const auto e = ambient_->edge_count();
    if (constraint_.size() != e || coupling_.size() != e) {
        throw std::invalid_argument("coupling system: edge masks must have one bit per ambient edge");
    }
    if (!coupling_.is_subset_of(constraint_)) {
        throw std::invalid_argument("coupling system: coupling is supported on free edges");
    }
    if (twist_) {
        if (twist_->size() != e) {
            throw std::invalid_argument("coupling system: twist must have one bit per ambient edge");
        }
        if (!twist_->is_subset_of(constraint_)) {
            throw std::invalid_argument("coupling system: twist is supported on free edges");
        }
    }
    for (const auto& [v, bit] : pinned_) {
        if (v >= ambient_->vertex_count()) {
            throw std::invalid_argument("coupling system: pinned vertex " + std::to_string(v) + " out of range");
        }
    }
}

BitVector CouplingSystem::twist_or_zero() const {
    return twist_ ? *twist_ : BitVector(coupling_.size());
}

BitVector CouplingSystem::effective_coupling() const {
    return twist_ ? coupling_ ^ *twist_ : coupling_;
}

Subcomplex CouplingSystem::pinned_subcomplex() const {
    std::vector<std::size_t> verts;
    for (const auto& [v, bit] : pinned_) {
        verts.push_back(v);
    }
    return Subcomplex::of_vertices(*ambient_, verts);
}

CouplingSystem CouplingSystem::with_pins(Pins pins) const {
    return {ambient_, constraint_, coupling_, twist_, std::move(pins), name_};
}

CouplingSystem CouplingSystem::with_coupling(BitVector coupling) const {
    return {ambient_, constraint_, std::move(coupling), twist_, pinned_, name_};
}

BitVector ConstraintGraph::to_graph(const BitVector& ambient_cochain) const {
    BitVector out(ambient_edge.size());
    for (std::size_t i = 0; i < ambient_edge.size(); ++i) {
        out.set(i, ambient_cochain.get(ambient_edge[i]));
    }
    return out;
}

BitVector ConstraintGraph::to_ambient(const BitVector& graph_cochain, std::size_t ambient_edges) const {
    BitVector out(ambient_edges);
    for (auto i : graph_cochain.support()) {
        out.set(ambient_edge[i]);
    }
    return out;
}

ConstraintGraph constraint_graph(const CouplingSystem& sys) {
    ConstraintGraph g;
    std::vector<Edge> edges;
    for (auto e : sys.constraint_edges().support()) {
        g.graph_edge[e] = edges.size();
        g.ambient_edge.push_back(e);
        edges.push_back(sys.ambient().edge(e));
    }
    g.graph = CellComplex(sys.ambient().vertex_count(), std::move(edges));
    return g;
}

namespace {

bool sum_along(const CouplingSystem& sys, const EdgeWalk& cycle, const BitVector& cochain) {
    if (!is_closed_walk(sys.ambient(), cycle)) {
        throw std::invalid_argument("holonomy: walk is not closed");
    }
    bool s = false;
    for (auto e : cycle.edges) {
        if (!sys.is_constraint(e)) {
            throw std::invalid_argument("holonomy: walk leaves the constraint graph at edge " + std::to_string(e));
        }
        s = s != cochain.get(e);
    }
    return s;
}

} // namespace

bool holonomy(const CouplingSystem& sys, const EdgeWalk& cycle) {
    return sum_along(sys, cycle, sys.effective_coupling());
}

TwistDecomposition twist_decompose(const CouplingSystem& sys, const EdgeWalk& cycle) {
    TwistDecomposition d;
    d.flat = sum_along(sys, cycle, sys.coupling());
    d.twist = sum_along(sys, cycle, sys.twist_or_zero());
    d.total = d.flat != d.twist;
    return d;
}

CouplingSystem without_vertices(const CouplingSystem& sys, const std::set<std::size_t>& vertices) {
    auto constraint = sys.constraint_edges();
    for (auto e : sys.constraint_edges().support()) {
        const auto& ed = sys.ambient().edge(e);
        if (vertices.contains(ed.u) || vertices.contains(ed.v)) {
            constraint.set(e, false);
        }
    }
    Pins pins;
    for (const auto& [v, bit] : sys.pinned()) {
        if (!vertices.contains(v)) {
            pins[v] = bit;
        }
    }
    std::optional<BitVector> twist;
    if (sys.twist()) {
        twist = *sys.twist() & constraint;
    }
    return {sys.ambient_ptr(), constraint, sys.coupling() & constraint, twist, std::move(pins), sys.name()};
}

} // namespace bistable
