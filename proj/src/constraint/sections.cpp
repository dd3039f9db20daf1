#include "bistable/constraint/sections.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace bistable {

namespace {

constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

std::vector<std::vector<std::size_t>> adjacency(const CellComplex& x, const BitVector& edges) {
    std::vector<std::vector<std::size_t>> adj(x.vertex_count());
    for (auto e : edges.support()) {
        adj[x.edge(e).u].push_back(e);
        if (x.edge(e).v != x.edge(e).u) {
            adj[x.edge(e).v].push_back(e);
        }
    }
    return adj;
}

struct Forest {
    std::vector<bool> value;
    std::vector<std::size_t> parent_edge; // none at roots
    std::vector<std::size_t> depth;
    std::vector<std::size_t> component;
    std::vector<std::size_t> roots;
};

// BFS transport x(w) = x(v) + c(e) from the lowest vertex of each component.
Forest transport(const CellComplex& x, const BitVector& edges, const BitVector& c) {
    const auto adj = adjacency(x, edges);
    const auto n = x.vertex_count();
    Forest f{std::vector<bool>(n, false), std::vector<std::size_t>(n, none), std::vector<std::size_t>(n, 0),
             std::vector<std::size_t>(n, none), {}};
    for (std::size_t r = 0; r < n; ++r) {
        if (f.component[r] != none) {
            continue;
        }
        const auto id = f.roots.size();
        f.roots.push_back(r);
        f.component[r] = id;
        std::deque<std::size_t> queue{r};
        while (!queue.empty()) {
            const auto v = queue.front();
            queue.pop_front();
            for (auto e : adj[v]) {
                const auto w = x.edge(e).other(v);
                if (f.component[w] != none) {
                    continue;
                }
                f.component[w] = id;
                f.value[w] = f.value[v] != c.get(e);
                f.parent_edge[w] = e;
                f.depth[w] = f.depth[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return f;
}

// Edges from v up to (excluding) ancestor a, with the vertices reached.
std::vector<std::size_t> climb(const CellComplex& x, const Forest& f, std::size_t v, std::size_t a) {
    std::vector<std::size_t> path;
    while (v != a) {
        const auto e = f.parent_edge[v];
        path.push_back(e);
        v = x.edge(e).other(v);
    }
    return path;
}

std::size_t lowest_common_ancestor(const CellComplex& x, const Forest& f, std::size_t a, std::size_t b) {
    while (f.depth[a] > f.depth[b]) {
        a = x.edge(f.parent_edge[a]).other(a);
    }
    while (f.depth[b] > f.depth[a]) {
        b = x.edge(f.parent_edge[b]).other(b);
    }
    while (a != b) {
        a = x.edge(f.parent_edge[a]).other(a);
        b = x.edge(f.parent_edge[b]).other(b);
    }
    return a;
}

// Cycle u -e-> v -> lca -> u through the tree.
EdgeWalk fundamental_cycle(const CellComplex& x, const Forest& f, std::size_t e) {
    const auto u = x.edge(e).u;
    const auto v = x.edge(e).v;
    const auto a = lowest_common_ancestor(x, f, u, v);
    EdgeWalk walk{u, {e}};
    for (auto pe : climb(x, f, v, a)) {
        walk.edges.push_back(pe);
    }
    auto down = climb(x, f, u, a);
    walk.edges.insert(walk.edges.end(), down.rbegin(), down.rend());
    return walk;
}

} // namespace

std::optional<PinClash> shortest_pin_clash(const CouplingSystem& sys) {
    const auto& x = sys.ambient();
    const auto c = sys.effective_coupling();
    const auto adj = adjacency(x, sys.constraint_edges());
    std::optional<PinClash> best;
    std::size_t best_dist = none;
    for (const auto& [s, s_bit] : sys.pinned()) {
        std::vector<std::size_t> dist(x.vertex_count(), none), parent(x.vertex_count(), none);
        std::vector<bool> value(x.vertex_count(), false);
        dist[s] = 0;
        value[s] = s_bit;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            const auto v = queue.front();
            queue.pop_front();
            for (auto e : adj[v]) {
                const auto w = x.edge(e).other(v);
                if (dist[w] != none) {
                    continue;
                }
                dist[w] = dist[v] + 1;
                value[w] = value[v] != c.get(e);
                parent[w] = e;
                queue.push_back(w);
            }
        }
        for (const auto& [t, t_bit] : sys.pinned()) {
            if (t <= s || dist[t] == none || value[t] == t_bit || dist[t] >= best_dist) {
                continue;
            }
            std::vector<std::size_t> back;
            for (auto w = t; w != s;) {
                back.push_back(parent[w]);
                w = x.edge(parent[w]).other(w);
            }
            best = PinClash{s, t, EdgeWalk{s, {back.rbegin(), back.rend()}}, value[t]};
            best_dist = dist[t];
        }
    }
    return best;
}

SolveResult solve_sections(const CouplingSystem& sys) {
    const auto& x = sys.ambient();
    const auto c = sys.effective_coupling();
    const auto f = transport(x, sys.constraint_edges(), c);
    SolveResult out;
    for (auto e : sys.constraint_edges().support()) {
        const auto& ed = x.edge(e);
        if ((f.value[ed.u] != f.value[ed.v]) != c.get(e)) {
            out.obstruction = OddCycle{fundamental_cycle(x, f, e)};
            return out;
        }
    }
    // Per component: the flip needed to meet the pins, if they agree.
    std::vector<std::optional<bool>> flip(f.roots.size());
    for (const auto& [v, bit] : sys.pinned()) {
        const bool need = f.value[v] != bit;
        auto& slot = flip[f.component[v]];
        if (slot && *slot != need) {
            out.obstruction = *shortest_pin_clash(sys);
            return out;
        }
        slot = need;
    }
    Sections s{BitVector(x.vertex_count()), {}};
    std::vector<BitVector> indicator(f.roots.size(), BitVector(x.vertex_count()));
    for (std::size_t v = 0; v < x.vertex_count(); ++v) {
        const auto comp = f.component[v];
        s.particular.set(v, f.value[v] != flip[comp].value_or(false));
        indicator[comp].set(v);
    }
    for (std::size_t k = 0; k < f.roots.size(); ++k) {
        if (!flip[k]) {
            s.flips.push_back(std::move(indicator[k]));
        }
    }
    out.sections = std::move(s);
    return out;
}

bool is_section(const CouplingSystem& sys, const BitVector& xv) {
    const auto& x = sys.ambient();
    if (xv.size() != x.vertex_count()) {
        return false;
    }
    const auto c = sys.effective_coupling();
    for (auto e : sys.constraint_edges().support()) {
        if ((xv.get(x.edge(e).u) != xv.get(x.edge(e).v)) != c.get(e)) {
            return false;
        }
    }
    return std::all_of(sys.pinned().begin(), sys.pinned().end(),
                       [&](const auto& p) { return xv.get(p.first) == p.second; });
}

BitVector spanning_forest(const CellComplex& x, const BitVector& edges) {
    const auto f = transport(x, edges, BitVector(x.edge_count()));
    BitVector out(x.edge_count());
    for (auto e : f.parent_edge) {
        if (e != none) {
            out.set(e);
        }
    }
    return out;
}

BitVector seam(const CouplingSystem& sys, const BitVector& forest) {
    const auto& x = sys.ambient();
    if (!forest.is_subset_of(sys.constraint_edges())) {
        throw std::invalid_argument("seam: forest uses free edges");
    }
    if (x.vertex_count() == 0) {
        return BitVector(x.edge_count());
    }
    const auto g_labels = component_labels(x, sys.constraint_edges());
    const auto f_labels = component_labels(x, forest);
    if (g_labels != f_labels || forest.count() + *std::max_element(f_labels.begin(), f_labels.end()) + 1 !=
                                    x.vertex_count()) {
        throw std::invalid_argument("seam: edge set is not a spanning forest of the constraint graph");
    }
    const auto c = sys.effective_coupling();
    const auto f = transport(x, forest, c);
    // c + δx vanishes on the forest.
    BitVector out(x.edge_count());
    for (auto e : sys.constraint_edges().support()) {
        const auto& ed = x.edge(e);
        out.set(e, c.get(e) != (f.value[ed.u] != f.value[ed.v]));
    }
    return out;
}

} // namespace bistable
