#include "bistable/torsor/double_cover.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "bistable/constraint/sections.hpp"

namespace bistable {

DoubleCover build_cover(const CouplingSystem& sys) {
    if (sys.constraint_edges().none()) {
        throw std::invalid_argument("build_cover: constraint graph has no edges");
    }
    const auto& x = sys.ambient();
    DoubleCover cover;
    cover.base_vertices = x.vertex_count();
    cover.coupling = sys.effective_coupling();
    cover.constraint_edges = sys.constraint_edges();
    std::vector<Edge> edges;
    for (auto e : sys.constraint_edges().support()) {
        const auto u = std::min(x.edge(e).u, x.edge(e).v);
        const auto v = std::max(x.edge(e).u, x.edge(e).v);
        const bool crossed = cover.coupling.get(e);
        edges.push_back({cover.lift(u, false), cover.lift(v, crossed)});
        edges.push_back({cover.lift(u, true), cover.lift(v, !crossed)});
        cover.base_edge.push_back(e);
        cover.base_edge.push_back(e);
    }
    cover.lifted = CellComplex(2 * x.vertex_count(), std::move(edges));
    return cover;
}

std::vector<std::size_t> cover_components(const DoubleCover& cover) {
    return component_labels(cover.lifted, BitVector::ones(cover.lifted.edge_count()));
}

std::vector<ComponentTriviality> cover_triviality(const DoubleCover& cover) {
    const auto n = cover.base_vertices;
    // Base components from the projections of lifted edges.
    std::vector<Edge> projected;
    for (const auto& le : cover.lifted.edges()) {
        projected.push_back({cover.project(le.u), cover.project(le.v)});
    }
    const CellComplex base(n, projected);
    const auto base_labels = component_labels(base, BitVector::ones(base.edge_count()));
    const auto lifted_labels = cover_components(cover);

    std::map<std::size_t, std::vector<std::size_t>> members;
    for (std::size_t v = 0; v < n; ++v) {
        members[base_labels[v]].push_back(v);
    }
    std::set<std::size_t> with_edges;
    for (const auto& e : projected) {
        with_edges.insert(base_labels[e.u]);
    }

    std::vector<ComponentTriviality> out;
    for (const auto& [label, verts] : members) {
        if (!with_edges.contains(label)) {
            continue;
        }
        ComponentTriviality report;
        report.base_vertices = verts;
        const auto anchor = lifted_labels[cover.lift(verts.front(), false)];
        report.trivial = lifted_labels[cover.lift(verts.front(), true)] != anchor;
        if (report.trivial) {
            BitVector s(n), t(n);
            for (auto v : verts) {
                const bool on_one = lifted_labels[cover.lift(v, true)] == anchor;
                s.set(v, on_one);
                t.set(v, !on_one);
            }
            report.sections = std::make_pair(std::move(s), std::move(t));
        }
        out.push_back(std::move(report));
    }
    return out;
}

std::vector<std::size_t> lift_walk(const DoubleCover& cover, const EdgeWalk& walk, bool start_sheet) {
    if (walk.start >= cover.base_vertices) {
        throw std::invalid_argument("lift_walk: start vertex out of range");
    }
    std::vector<std::size_t> out{cover.lift(walk.start, start_sheet)};
    auto at = walk.start;
    bool sheet = start_sheet;
    for (auto e : walk.edges) {
        if (e >= cover.constraint_edges.size() || !cover.constraint_edges.get(e)) {
            throw std::invalid_argument("lift_walk: edge " + std::to_string(e) + " is not in the constraint graph");
        }
        // Find the lifted edge over e leaving the current lifted vertex.
        const auto here = cover.lift(at, sheet);
        std::optional<std::size_t> next;
        const auto first = static_cast<std::size_t>(
            std::lower_bound(cover.base_edge.begin(), cover.base_edge.end(), e) - cover.base_edge.begin());
        for (auto le = first; le < first + 2; ++le) {
            if (cover.lifted.edge(le).touches(here)) {
                next = cover.lifted.edge(le).other(here);
                break;
            }
        }
        if (!next) {
            throw std::invalid_argument("lift_walk: walk is not connected at edge " + std::to_string(e));
        }
        at = cover.project(*next);
        sheet = cover.sheet(*next);
        out.push_back(*next);
    }
    return out;
}

bool monodromy(const DoubleCover& cover, const EdgeWalk& loop) {
    const auto lifted = lift_walk(cover, loop);
    if (cover.project(lifted.back()) != loop.start) {
        throw std::invalid_argument("monodromy: walk is not closed");
    }
    return cover.sheet(lifted.back());
}

std::optional<std::vector<std::size_t>> cover_isomorphism(const DoubleCover& a, const DoubleCover& b) {
    if (a.base_vertices != b.base_vertices || a.constraint_edges != b.constraint_edges) {
        return std::nullopt;
    }
    // Solve δξ = c_a + c_b on the constraint graph by transport.
    const auto n = a.base_vertices;
    const auto diff = a.coupling ^ b.coupling;
    std::vector<std::optional<bool>> xi(n);
    std::vector<std::vector<std::pair<std::size_t, bool>>> adj(n);
    for (std::size_t i = 0; i < a.lifted.edge_count(); i += 2) {
        const auto u = a.project(a.lifted.edge(i).u);
        const auto v = a.project(a.lifted.edge(i).v);
        const bool bit = diff.get(a.base_edge[i]);
        adj[u].push_back({v, bit});
        adj[v].push_back({u, bit});
    }
    for (std::size_t r = 0; r < n; ++r) {
        if (xi[r]) {
            continue;
        }
        xi[r] = false;
        std::vector<std::size_t> stack{r};
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            for (const auto& [w, bit] : adj[v]) {
                const bool want = *xi[v] != bit;
                if (!xi[w]) {
                    xi[w] = want;
                    stack.push_back(w);
                } else if (*xi[w] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<std::size_t> map(2 * n);
    for (std::size_t v = 0; v < n; ++v) {
        map[a.lift(v, false)] = b.lift(v, *xi[v]);
        map[a.lift(v, true)] = b.lift(v, !*xi[v]);
    }
    std::multiset<std::pair<std::size_t, std::size_t>> target;
    for (const auto& e : b.lifted.edges()) {
        target.insert(std::minmax(e.u, e.v));
    }
    for (const auto& e : a.lifted.edges()) {
        auto it = target.find(std::minmax(map[e.u], map[e.v]));
        if (it == target.end()) {
            throw std::logic_error("cover_isomorphism: relabeling does not carry edges to edges");
        }
        target.erase(it);
    }
    return map;
}

} // namespace bistable
