#include "bistable/torsor/aperture.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace bistable {

bool Ring::holonomy() const {
    return std::count(coupling.begin(), coupling.end(), true) % 2 == 1;
}

Ring ring_of(const CouplingSystem& sys) {
    const auto& x = sys.ambient();
    const auto c = sys.effective_coupling();
    std::vector<std::vector<std::size_t>> incident(x.vertex_count());
    for (auto e : sys.constraint_edges().support()) {
        if (x.edge(e).u == x.edge(e).v) {
            throw std::invalid_argument("ring: constraint graph has a loop edge");
        }
        incident[x.edge(e).u].push_back(e);
        incident[x.edge(e).v].push_back(e);
    }
    std::optional<std::size_t> first;
    std::size_t used = 0;
    for (std::size_t v = 0; v < x.vertex_count(); ++v) {
        if (incident[v].empty()) {
            continue;
        }
        if (incident[v].size() != 2) {
            throw std::invalid_argument("ring: constraint graph is not a single cycle (vertex " + std::to_string(v) +
                                        " has degree " + std::to_string(incident[v].size()) + ")");
        }
        ++used;
        if (!first) {
            first = v;
        }
    }
    if (!first) {
        throw std::invalid_argument("ring: constraint graph has no edges");
    }
    Ring ring;
    auto at = *first;
    auto e = std::min(incident[at][0], incident[at][1]);
    do {
        ring.vertices.push_back(at);
        ring.edges.push_back(e);
        ring.coupling.push_back(c.get(e));
        at = x.edge(e).other(at);
        e = incident[at][0] == e ? incident[at][1] : incident[at][0];
    } while (at != *first);
    if (ring.vertices.size() != used) {
        throw std::invalid_argument("ring: constraint graph is not connected");
    }
    return ring;
}

Ring ring_with_coupling(std::vector<bool> coupling) {
    Ring ring;
    const auto n = coupling.size();
    for (std::size_t i = 0; i < n; ++i) {
        ring.vertices.push_back(i);
        ring.edges.push_back(i);
    }
    ring.coupling = std::move(coupling);
    return ring;
}

bool Aperture::consistent() const {
    for (std::size_t i = 0; i + 1 < length(); ++i) {
        if ((display[i] != display[i + 1]) != ring->coupling[position(i)]) {
            return false;
        }
    }
    return true;
}

Aperture open_aperture(std::shared_ptr<const Ring> ring, std::size_t start, std::size_t k, bool first) {
    if (k == 0) {
        throw std::invalid_argument("aperture: window length must be at least 1");
    }
    if (k >= ring->size()) {
        throw std::invalid_argument("aperture must be contractible: window length " + std::to_string(k) +
                                    " covers a ring of " + std::to_string(ring->size()));
    }
    const auto n = ring->size();
    Aperture ap{std::move(ring), start % n, {}};
    ap.display.push_back(first);
    for (std::size_t i = 1; i < k; ++i) {
        ap.display.push_back(ap.display.back() != ap.ring->coupling[ap.position(i - 1)]);
    }
    return ap;
}

Aperture slide_aperture(const Aperture& ap, int direction) {
    const auto n = ap.ring->size();
    if (ap.length() >= n) {
        throw std::invalid_argument("aperture must be contractible");
    }
    if (direction != 1 && direction != -1) {
        throw std::invalid_argument("aperture: direction must be +1 or -1");
    }
    Aperture out = ap;
    if (direction == 1) {
        const auto crossed = ap.position(ap.length() - 1);
        out.display.erase(out.display.begin());
        out.display.push_back(ap.display.back() != ap.ring->coupling[crossed]);
        out.start = (ap.start + 1) % n;
    } else {
        const auto crossed = (ap.start + n - 1) % n;
        out.display.pop_back();
        out.display.insert(out.display.begin(), ap.display.front() != ap.ring->coupling[crossed]);
        out.start = (ap.start + n - 1) % n;
    }
    if (!out.consistent()) {
        throw std::logic_error("aperture: transport broke window consistency");
    }
    return out;
}

namespace {

TraceStep snapshot(const Aperture& ap) {
    TraceStep step;
    for (std::size_t i = 0; i < ap.length(); ++i) {
        step.window.push_back(ap.ring->vertices[ap.position(i)]);
    }
    step.display = ap.display;
    return step;
}

} // namespace

CircuitResult circuit_monodromy(const Ring& ring, std::size_t window_length, std::size_t laps, std::size_t start) {
    auto shared = std::make_shared<const Ring>(ring);
    auto ap = open_aperture(shared, start, window_length);
    const auto initial = ap.display;
    CircuitResult out;
    out.steps.push_back(snapshot(ap));
    for (std::size_t i = 0; i < laps * ring.size(); ++i) {
        ap = slide_aperture(ap, 1);
        out.steps.push_back(snapshot(ap));
    }
    out.flip = ap.display.front() != initial.front();
    return out;
}

CircuitResult circuit_monodromy(const CouplingSystem& sys, std::size_t window_length, std::size_t laps,
                                std::size_t start) {
    return circuit_monodromy(ring_of(sys), window_length, laps, start);
}

std::size_t DualConfigTorsor::config_index(std::size_t a, std::size_t b) const {
    const std::pair<std::size_t, std::size_t> key{std::min(a % n, b % n), std::max(a % n, b % n)};
    const auto it = std::lower_bound(configs.begin(), configs.end(), key);
    if (it == configs.end() || *it != key) {
        throw std::out_of_range("dual config: windows at " + std::to_string(a) + " and " + std::to_string(b) +
                                " overlap");
    }
    return static_cast<std::size_t>(it - configs.begin());
}

DualConfigTorsor dual_config_torsor(std::size_t n, std::size_t k, const std::optional<std::vector<bool>>& ring_coupling) {
    if (k == 0) {
        throw std::invalid_argument("dual aperture: window length must be at least 1");
    }
    if (2 * k >= n) {
        throw std::invalid_argument("dual aperture: two windows of length " + std::to_string(k) +
                                    " cannot be disjoint on a cycle of " + std::to_string(n));
    }
    const auto coupling = ring_coupling.value_or(std::vector<bool>(n, false));
    if (coupling.size() != n) {
        throw std::invalid_argument("dual aperture: ring coupling must have n bits");
    }
    DualConfigTorsor t;
    t.n = n;
    t.k = k;
    auto disjoint = [&](std::size_t a, std::size_t b) { return b - a >= k && a + n - b >= k; };
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (disjoint(a, b)) {
                t.configs.emplace_back(a, b);
            }
        }
    }
    auto valid = [&](std::size_t a, std::size_t b) {
        const auto lo = std::min(a % n, b % n);
        const auto hi = std::max(a % n, b % n);
        return lo != hi && disjoint(lo, hi);
    };

    // Edge for "window starting at p advances by one" out of config i.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> advance;
    std::vector<Edge> edges;
    std::vector<bool> bits;
    for (std::size_t i = 0; i < t.configs.size(); ++i) {
        const auto [a, b] = t.configs[i];
        for (auto [p, other] : {std::pair{a, b}, std::pair{b, a}}) {
            if (!valid(p + 1, other)) {
                continue;
            }
            advance[{i, p}] = edges.size();
            edges.push_back({i, t.config_index(p + 1, other)});
            const bool wrap = p == n - 1;
            bits.push_back(coupling[(p + k - 1) % n] != wrap);
        }
    }
    std::vector<std::vector<std::size_t>> faces;
    for (std::size_t i = 0; i < t.configs.size(); ++i) {
        const auto [a, b] = t.configs[i];
        if (!valid(a + 1, b) || !valid(a, b + 1) || !valid(a + 1, b + 1)) {
            continue;
        }
        const auto ia = t.config_index(a + 1, b);
        const auto ib = t.config_index(a, b + 1);
        faces.push_back({advance.at({i, a}), advance.at({ia, b}), advance.at({ib, a}), advance.at({i, b})});
    }
    t.cocycle = BitVector(edges.size());
    for (std::size_t e = 0; e < bits.size(); ++e) {
        t.cocycle.set(e, bits[e]);
    }
    t.complex = CellComplex(t.configs.size(), std::move(edges), std::move(faces));
    require_valid(t.complex);
    const auto comps = component_labels(t.complex, BitVector::ones(t.complex.edge_count()));
    const auto components = comps.empty() ? 0 : *std::max_element(comps.begin(), comps.end()) + 1;
    t.graph_cycle_rank = t.complex.edge_count() + components - t.complex.vertex_count();
    t.h1 = cohomology(t.complex, 1);
    t.cocycle_class = t.h1.coordinates(t.cocycle);
    return t;
}

EdgeWalk exchange_loop(const DualConfigTorsor& t) {
    std::size_t lower = 0;
    std::size_t upper = t.n / 2;
    const auto start = t.config_index(lower, upper);
    EdgeWalk walk{start, {}};
    const auto incident_edges = t.complex.vertex_edges();
    auto step = [&](std::size_t& mover, std::size_t other) {
        const auto from = t.config_index(mover, other);
        const auto to = t.config_index(mover + 1, other);
        const auto& incident = incident_edges[from];
        for (auto e : incident) {
            if (t.complex.edge(e).other(from) == to) {
                walk.edges.push_back(e);
                mover = (mover + 1) % t.n;
                return;
            }
        }
        throw std::logic_error("exchange_loop: missing configuration edge");
    };
    const auto lower_moves = t.n / 2;
    const auto upper_moves = t.n - t.n / 2;
    for (std::size_t i = 0; i < upper_moves; ++i) {
        step(upper, lower);
        if (i < lower_moves) {
            step(lower, upper);
        }
    }
    return walk;
}

bool config_monodromy(const DualConfigTorsor& t, const EdgeWalk& loop) {
    if (!is_closed_walk(t.complex, loop)) {
        throw std::invalid_argument("config_monodromy: walk is not closed");
    }
    bool s = false;
    for (auto e : loop.edges) {
        s = s != t.cocycle.get(e);
    }
    return s;
}

} // namespace bistable
