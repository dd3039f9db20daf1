#include <algorithm>
#include <deque>
#include <optional>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "bistable/builders/builders.hpp"
#include "bistable/constraint/classify.hpp"
#include "bistable/torsor/aperture.hpp"
#include "bistable/torsor/double_cover.hpp"

using namespace bistable;

namespace {

std::size_t lifted_components(const DoubleCover& cover) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : cover.lifted.edges()) {
        edges.emplace_back(e.u, e.v);
    }
    // Only lifts of vertices touched by the constraint graph count.
    std::vector<bool> touched(cover.lifted.vertex_count(), false);
    for (const auto& e : cover.lifted.edges()) {
        touched[e.u] = touched[e.v] = true;
    }
    const auto isolated = static_cast<std::size_t>(std::count(touched.begin(), touched.end(), false));
    return oracle::component_count(cover.lifted.vertex_count(), edges) - isolated;
}

// Shortest path from a to b over `edges` without using edge `skip`.
std::optional<std::vector<std::size_t>> detour(const CellComplex& x, const BitVector& edges, std::size_t skip,
                                               std::size_t a, std::size_t b) {
    const auto incident = x.vertex_edges();
    std::vector<std::optional<std::size_t>> via(x.vertex_count());
    std::vector<bool> seen(x.vertex_count(), false);
    std::deque<std::size_t> queue{a};
    seen[a] = true;
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop_front();
        for (auto e : incident[u]) {
            const auto w = x.edge(e).other(u);
            if (e == skip || !edges.get(e) || seen[w]) {
                continue;
            }
            seen[w] = true;
            via[w] = e;
            queue.push_back(w);
        }
    }
    if (!seen[b]) {
        return std::nullopt;
    }
    std::vector<std::size_t> path;
    for (auto at = b; at != a; at = x.edge(*via[at]).other(at)) {
        path.push_back(*via[at]);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

// Random walk out, an optional cycle through a random edge at the far end,
// then the outward path retraced.
EdgeWalk random_closed_walk(std::mt19937_64& rng, const CellComplex& x, const BitVector& edges, std::size_t start,
                            std::size_t steps) {
    const auto incident = x.vertex_edges();
    auto at = start;
    std::vector<std::size_t> path;
    for (std::size_t i = 0; i < steps; ++i) {
        std::vector<std::size_t> options;
        for (auto e : incident[at]) {
            if (edges.get(e)) {
                options.push_back(e);
            }
        }
        if (options.empty()) {
            break;
        }
        const auto e = options[rng() % options.size()];
        path.push_back(e);
        at = x.edge(e).other(at);
    }
    EdgeWalk w{start, path};
    std::vector<std::size_t> options;
    for (auto e : incident[at]) {
        if (edges.get(e)) {
            options.push_back(e);
        }
    }
    if (!options.empty() && rng() % 2 == 0) {
        const auto e = options[rng() % options.size()];
        const auto far = x.edge(e).other(at);
        if (auto back = detour(x, edges, e, far, at)) {
            w.edges.push_back(e);
            w.edges.insert(w.edges.end(), back->begin(), back->end());
        }
    }
    w.edges.insert(w.edges.end(), path.rbegin(), path.rend());
    return w;
}

// Parity of the coupling along a walk, read off directly.
bool coupling_parity(const CouplingSystem& sys, const EdgeWalk& w) {
    bool s = false;
    for (auto e : w.edges) {
        s = s != sys.effective_coupling().get(e);
    }
    return s;
}

} // namespace

TEST_CASE("cover construction") {
    const auto x = std::make_shared<const CellComplex>(2, std::vector<Edge>{{0, 1}});
    const CouplingSystem agree(x, BitVector::ones(1), BitVector(1));
    const auto single = build_cover(agree);
    CHECK(single.lifted.vertex_count() == 4);
    CHECK(single.lifted.edge(0) == Edge{0, 1});
    CHECK(single.lifted.edge(1) == Edge{2, 3});
    CHECK(lifted_components(single) == 2);

    const auto odd = build_cover(gear_ring(5));
    CHECK(odd.lifted.vertex_count() == 10);
    CHECK(lifted_components(odd) == 1);
    CHECK(cover_triviality(odd).size() == 1);
    CHECK_FALSE(cover_triviality(odd).front().trivial);

    const auto even = build_cover(gear_ring(6));
    CHECK(lifted_components(even) == 2);
    const auto report = cover_triviality(even);
    REQUIRE(report.size() == 1);
    CHECK(report.front().trivial);

    const CouplingSystem empty(x, BitVector(1), BitVector(1));
    CHECK_THROWS_AS((void)build_cover(empty), std::invalid_argument);
}

TEST_CASE("trivial covers carry the two sections") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + rng() % 9;
        // Random tree with coupling δx.
        std::vector<Edge> edges;
        for (std::size_t v = 1; v < n; ++v) {
            edges.push_back({rng() % v, v});
        }
        const auto xv = oracle::random_vector(rng, n);
        const auto x = std::make_shared<const CellComplex>(n, edges);
        const CouplingSystem sys(x, BitVector::ones(n - 1), coboundary(*x, 0, xv));
        const auto report = cover_triviality(build_cover(sys));
        REQUIRE(report.size() == 1);
        REQUIRE(report.front().trivial);
        const auto& [s, t] = *report.front().sections;
        CHECK(((s == xv && t == ~xv) || (s == ~xv && t == xv)));
    }
}

TEST_CASE("torus fundamental cycle cover is nontrivial") {
    const auto torus = gear_torus(3, 3);
    const auto [h, v] = torus_generators(3, 3);
    BitVector row(torus.ambient().edge_count());
    for (auto e : h.edges) {
        row.set(e);
    }
    const CouplingSystem restricted(torus.ambient_ptr(), row, torus.coupling() & row);
    const auto report = cover_triviality(build_cover(restricted));
    REQUIRE(report.size() == 1);
    CHECK_FALSE(report.front().trivial);
}

TEST_CASE("cover connectivity matches the class, monodromy matches holonomy") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 11;
        auto sys = oracle::random_system(rng, n, 1 + rng() % (2 * n));
        const auto cover = build_cover(sys);
        const auto cls = classify(sys).coupling_class;
        bool any_nontrivial = false;
        for (const auto& r : cover_triviality(cover)) {
            any_nontrivial = any_nontrivial || !r.trivial;
        }
        CHECK(any_nontrivial == cls.any());

        for (int k = 0; k < 5; ++k) {
            const auto start = sys.ambient().edge(rng() % sys.ambient().edge_count()).u;
            const auto loop = random_closed_walk(rng, sys.ambient(), sys.constraint_edges(), start, 1 + rng() % 6);
            CHECK(monodromy(cover, loop) == holonomy(sys, loop));
            CHECK(monodromy(cover, loop) == coupling_parity(sys, loop));
        }
        const auto solved = solve_sections(sys.with_pins({}));
        if (!solved.solvable()) {
            const auto& cycle = std::get<OddCycle>(*solved.obstruction).cycle;
            CHECK(monodromy(cover, cycle));
            // Concatenation with itself has trivial monodromy.
            auto twice = cycle;
            twice.edges.insert(twice.edges.end(), cycle.edges.begin(), cycle.edges.end());
            CHECK_FALSE(monodromy(cover, twice));
        }

        // Cohomologous couplings give isomorphic covers.
        const auto xi = oracle::random_vector(rng, n);
        const auto shifted = sys.with_coupling(sys.coupling() ^ coboundary(sys.ambient(), 0, xi));
        CHECK(cover_isomorphism(cover, build_cover(shifted)).has_value());
    }
    CHECK_FALSE(cover_isomorphism(build_cover(gear_ring(5)), build_cover(gear_ring(5).with_coupling(BitVector(5))))
                    .has_value());
}

TEST_CASE("deck flip commutes with lifting") {
    const auto sys = gear_torus(3, 4);
    const auto cover = build_cover(sys);
    const auto [h, v] = torus_generators(3, 4);
    const auto from0 = lift_walk(cover, v, false);
    const auto from1 = lift_walk(cover, v, true);
    REQUIRE(from0.size() == from1.size());
    for (std::size_t i = 0; i < from0.size(); ++i) {
        CHECK(from1[i] == cover.deck(from0[i]));
    }
    CHECK(monodromy(cover, h) == holonomy(sys, h));
    CHECK(monodromy(cover, v) == holonomy(sys, v));
    CHECK_THROWS_AS((void)monodromy(cover, EdgeWalk{0, {0}}), std::invalid_argument);
}

TEST_CASE("aperture slides") {
    const auto agree = std::make_shared<const Ring>(ring_with_coupling(std::vector<bool>(6, false)));
    auto ap = open_aperture(agree, 0, 1);
    for (int i = 0; i < 10; ++i) {
        ap = slide_aperture(ap, i % 3 == 0 ? -1 : 1);
        CHECK(ap.display == std::vector<bool>{false});
    }
    const auto oppose = std::make_shared<const Ring>(ring_with_coupling(std::vector<bool>(5, true)));
    auto op = open_aperture(oppose, 0, 2);
    CHECK(op.display == std::vector<bool>{false, true});
    op = slide_aperture(op, 1);
    CHECK(op.display == std::vector<bool>{true, false});
    CHECK(op.consistent());
    CHECK_THROWS_WITH_AS((void)open_aperture(oppose, 0, 5), doctest::Contains("aperture must be contractible"),
                         std::invalid_argument);

    const auto circuit = circuit_monodromy(gear_ring(5), 2, 1);
    CHECK(circuit.flip);
    CHECK(circuit.steps.size() == 6);
    CHECK(circuit.steps.front().window == circuit.steps.back().window);
    CHECK(circuit.steps.back().display.front() != circuit.steps.front().display.front());
    CHECK_FALSE(circuit_monodromy(gear_ring(5), 1, 2).flip);
    CHECK_FALSE(circuit_monodromy(gear_ring(6), 3, 1).flip);
    CHECK_THROWS_AS((void)circuit_monodromy(gear_torus(3, 3), 1, 1), std::invalid_argument);
}

TEST_CASE("circuit flip is laps times holonomy") {
    for (std::size_t n = 4; n <= 9; ++n) {
        for (const auto& sys : {gear_ring(n), mobius_ring(n), spinning_necker_ring(n)}) {
            const bool hol = ring_of(sys).holonomy();
            for (std::size_t k = 1; k <= 3; ++k) {
                for (std::size_t laps = 0; laps <= 3; ++laps) {
                    for (std::size_t start = 0; start < n; start += 2) {
                        const auto r = circuit_monodromy(sys, k, laps, start);
                        CHECK(r.flip == (hol && laps % 2 == 1));
                    }
                }
            }
        }
    }
}

TEST_CASE("ring reading") {
    const auto ring = ring_of(gear_ring(5));
    CHECK(ring.vertices == std::vector<std::size_t>{0, 1, 2, 3, 4});
    CHECK(ring.edges == std::vector<std::size_t>{0, 1, 2, 3, 4});
    CHECK_THROWS_AS((void)ring_of(necker_path(3)), std::invalid_argument);
    const auto rosette = ring_of(p3_rosette());
    CHECK(rosette.size() == 5);
}

TEST_CASE("dual aperture configuration torsor") {
    for (std::size_t n : {6u, 8u}) {
        const auto t = dual_config_torsor(n, 1);
        CHECK(t.configs.size() == n * (n - 1) / 2);
        CHECK(coboundary(t.complex, 1, t.cocycle).none());
        CHECK(t.h1.dimension() == 1);
        CHECK(t.cocycle_class.any());
        const auto loop = exchange_loop(t);
        CHECK(is_closed_walk(t.complex, loop));
        CHECK(config_monodromy(t, loop));
        // The exchange loop represents the generator of H¹ of the configuration space.
        const auto rep = t.h1.representatives().front();
        bool pairing = false;
        for (auto e : loop.edges) {
            pairing = pairing != rep.get(e);
        }
        CHECK(pairing);
    }
    CHECK_THROWS_AS((void)dual_config_torsor(6, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)dual_config_torsor(4, 2), std::invalid_argument);

    for (std::size_t n = 5; n <= 10; ++n) {
        for (std::size_t k = 1; 2 * k < n; ++k) {
            const auto t = dual_config_torsor(n, k);
            CHECK(t.configs.size() == n * (n - 2 * k + 1) / 2);
            CHECK(t.h1.dimension() == 1);
            CHECK(config_monodromy(t, exchange_loop(t)));
            // With an opposing ring the monodromy picks up the ring holonomy.
            const auto opp = dual_config_torsor(n, k, std::vector<bool>(n, true));
            CHECK(config_monodromy(opp, exchange_loop(opp)) == (n % 2 == 0));
        }
    }
}

TEST_CASE("smallest loops of the configuration graph") {
    // n = 6, k = 1: no loop moves one window alone around the ring; the
    // cycle space has a basis of short squares plus the exchange class.
    const auto t = dual_config_torsor(6, 1);
    const auto graph_only = CellComplex(t.complex.vertex_count(), t.complex.edges());
    CHECK(cohomology(graph_only, 1).dimension() == t.graph_cycle_rank);
    CHECK(t.graph_cycle_rank == t.complex.face_count() + 1);
    // Fixing window 0 at position 0 leaves the other window a path, not a cycle.
    std::vector<std::size_t> moves;
    for (std::size_t e = 0; e < t.complex.edge_count(); ++e) {
        const auto [a1, b1] = t.configs[t.complex.edge(e).u];
        const auto [a2, b2] = t.configs[t.complex.edge(e).v];
        if (a1 == 0 && a2 == 0) {
            moves.push_back(e);
        }
    }
    CHECK(moves.size() == 4); // positions 1..5 form a path, 5 -> 0 would collide
}
