#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "bistable/builders/builders.hpp"
#include "bistable/constraint/classify.hpp"
#include "bistable/constraint/extension.hpp"

using namespace bistable;

namespace {

EdgeWalk ring_walk(std::size_t n) {
    EdgeWalk w{0, {}};
    for (std::size_t i = 0; i < n; ++i) {
        w.edges.push_back(i);
    }
    return w;
}

std::vector<std::size_t> all_faces(const CellComplex& x) {
    std::vector<std::size_t> f(x.face_count());
    for (std::size_t i = 0; i < f.size(); ++i) {
        f[i] = i;
    }
    return f;
}

} // namespace

TEST_CASE("holonomy") {
    CHECK(holonomy(gear_ring(5), ring_walk(5)));
    CHECK_FALSE(holonomy(gear_ring(6), ring_walk(6)));
    CHECK_FALSE(holonomy(mobius_ring(5), ring_walk(5)));
    CHECK_THROWS_AS((void)holonomy(gear_ring(5), EdgeWalk{0, {0, 1}}), std::invalid_argument);
    const auto rosette = p3_rosette();
    CHECK_THROWS_AS((void)holonomy(rosette, EdgeWalk{0, {0, 6, 5}}), std::invalid_argument);
}

TEST_CASE("solve_sections examples") {
    const auto six = solve_sections(gear_ring(6));
    REQUIRE(six.solvable());
    CHECK(six.sections->count_log2() == 1);
    CHECK(six.sections->particular == BitVector::from_string("010101"));
    CHECK(six.sections->flips.front() == BitVector::ones(6));

    const auto path = solve_sections(necker_path(4));
    REQUIRE_FALSE(path.solvable());
    const auto& clash = std::get<PinClash>(*path.obstruction);
    CHECK(clash.source == 0);
    CHECK(clash.target == 4);
    CHECK(clash.path.edges.size() == 4);

    const auto rosette = solve_sections(p3_rosette());
    REQUIRE_FALSE(rosette.solvable());
    const auto& cycle = std::get<OddCycle>(*rosette.obstruction).cycle;
    CHECK(cycle.edges.size() == 5);
    CHECK(holonomy(p3_rosette(), cycle));
}

TEST_CASE("sections agree with brute force on random systems") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = 2 + rng() % 11;
        const auto m = rng() % (2 * n);
        const auto sys = oracle::random_system(rng, n, m, trial % 2 == 0 ? 0.0 : 0.25);
        const auto brute = oracle::count_sections(sys);
        const auto s = solve_sections(sys);
        CHECK(s.solvable() == (brute > 0));
        if (s.solvable()) {
            CHECK(is_section(sys, s.sections->particular));
            CHECK(brute == (std::size_t{1} << s.sections->count_log2()));
            for (const auto& f : s.sections->flips) {
                CHECK(is_section(sys, s.sections->particular ^ f));
            }
        } else if (const auto* odd = std::get_if<OddCycle>(&*s.obstruction)) {
            CHECK(holonomy(sys, odd->cycle));
        } else {
            const auto& pc = std::get<PinClash>(*s.obstruction);
            const auto verts = trace_walk(sys.ambient(), pc.path);
            REQUIRE(verts);
            CHECK(verts->back() == pc.target);
            bool value = sys.pinned().at(pc.source);
            for (auto e : pc.path.edges) {
                value = value != sys.effective_coupling().get(e);
            }
            CHECK(value == pc.transported);
            CHECK(value != sys.pinned().at(pc.target));
        }
    }
}

TEST_CASE("connected unpinned systems have exactly two sections") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = 3 + rng() % 8;
        auto sys = oracle::random_system(rng, n, 2 * n);
        const auto g = constraint_graph(sys);
        if (cohomology(g.graph, 0).dimension() != 1) {
            continue;
        }
        const auto s = solve_sections(sys);
        if (!s.solvable()) {
            continue;
        }
        REQUIRE(s.sections->flips.size() == 1);
        CHECK(s.sections->flips.front() == BitVector::ones(n));
    }
}

TEST_CASE("classify examples") {
    const auto grid = classify(necker_grid(4, 3));
    CHECK(grid.level == Level::Ambiguity);
    CHECK(grid.section_count_log2 == 1u);

    const auto lozenge = classify(lozenge_patch(6, 4, true));
    CHECK(lozenge.level == Level::Conflict);
    REQUIRE(lozenge.relative_class);
    CHECK_FALSE(lozenge.relative_class->is_zero());

    const auto torus = classify(gear_torus(3, 3));
    CHECK(torus.level == Level::Impossibility);
    const auto& cycle = std::get<OddCycle>(torus.witness).cycle;
    CHECK(holonomy(gear_torus(3, 3), cycle));

    const auto path = classify(necker_path(5));
    CHECK(path.level == Level::Conflict);
    CHECK(path.groups.at("H1(G,A)") == 1);
    const auto agree = classify(necker_path(5, true, true));
    CHECK(agree.level == Level::Ambiguity);
    CHECK(agree.relative_class->is_zero());
    CHECK(agree.section_count_log2 == 0u);

    // Empty constraint graph: every assignment is a section.
    const auto x = std::make_shared<const CellComplex>(4, std::vector<Edge>{{0, 1}});
    const CouplingSystem vacuous(x, BitVector(1), BitVector(1));
    const auto v = classify(vacuous);
    CHECK(v.level == Level::Ambiguity);
    CHECK(v.section_count_log2 == 4u);

    // Impossibility outranks a pin clash, which is listed secondarily.
    const auto both = classify(gear_ring(5).with_pins({{0, false}, {2, true}}));
    CHECK(both.level == Level::Impossibility);
    CHECK(both.secondary_conflict);

    // Curvature with an explicit region.
    const auto dodeca = dodecahedral_sphere();
    const auto curved = classify(dodeca, std::vector<std::size_t>{0});
    CHECK(curved.level == Level::Curvature);
    CHECK(curved.secondary_impossibility);
    const auto flat = classify(p3_rosette().with_coupling(BitVector(10)), std::vector<std::size_t>{0, 1, 2, 3, 4});
    CHECK(flat.level == Level::Ambiguity);
    CHECK_THROWS_AS((void)classify(p3_rosette(), std::vector<std::size_t>{0}), RegionBoundaryError);
}

TEST_CASE("impossibility iff nonzero class") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = 2 + rng() % 9;
        const auto sys = oracle::random_system(rng, n, rng() % (2 * n));
        const auto c = classify(sys);
        CHECK((c.level == Level::Impossibility) == c.coupling_class.any());
    }
}

TEST_CASE("twist decomposition") {
    for (std::size_t n = 3; n <= 9; ++n) {
        const auto d = twist_decompose(spinning_necker_ring(n), ring_walk(n));
        CHECK_FALSE(d.flat);
        CHECK(d.twist);
        CHECK(d.total);
    }
    const auto m7 = twist_decompose(mobius_ring(7), ring_walk(7));
    CHECK(m7.flat);
    CHECK(m7.twist);
    CHECK_FALSE(m7.total);
    const auto planar = twist_decompose(gear_ring(4), ring_walk(4));
    CHECK_FALSE(planar.flat);
    CHECK_FALSE(planar.twist);
    CHECK_FALSE(planar.total);
}

TEST_CASE("extension and curvature") {
    const auto torus = gear_torus(3, 3);
    const auto full = extend_coupling(torus, ZeroExtension{});
    CHECK(full.values == torus.coupling());
    CHECK(full.curvature == coboundary(torus.ambient(), 1, torus.coupling()));

    const auto rosette = p3_rosette();
    const auto ext = extend_coupling(rosette, ZeroExtension{});
    CHECK(total_curvature(ext, all_faces(rosette.ambient())));
    CHECK(extend_coupling(rosette, RandomExtension{5}).values == extend_coupling(rosette, RandomExtension{5}).values);
    CHECK_THROWS_AS((void)extend_coupling(rosette, ExplicitExtension{{0, true}}), std::invalid_argument);
    const auto given = extend_coupling(rosette, ExplicitExtension{{5, true}});
    CHECK(given.values.get(5));

    const auto corner = gear_corner(3);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto e = extend_coupling(corner, RandomExtension{seed});
        CHECK(e.curvature.parity());
    }
    const auto zero = extend_coupling(corner, ZeroExtension{});
    CHECK(zero.frustrated_faces() == std::vector<std::size_t>{corner.ambient().face_count() - 1});

    const auto hept = heptagonal_patch(1);
    CHECK(total_curvature(extend_coupling(hept, ZeroExtension{}), {0}));
    const auto dodeca = dodecahedral_sphere();
    const auto dext = extend_coupling(dodeca, ZeroExtension{});
    CHECK_FALSE(total_curvature(dext, all_faces(dodeca.ambient())));
    CHECK(total_curvature(dext, {3}));

    try {
        (void)total_curvature(ext, {0});
        FAIL("expected RegionBoundaryError");
    } catch (const RegionBoundaryError& err) {
        CHECK(err.free_edges() == std::vector<std::size_t>{5, 6});
    }
}

TEST_CASE("total curvature is independent of the extension") {
    for (const auto& sys : {p3_rosette(), heptagonal_patch(2), gear_corner(3), dodecahedral_sphere()}) {
        const auto faces = all_faces(sys.ambient());
        const auto free = free_boundary_edges(sys, faces);
        if (!free.empty()) {
            continue;
        }
        const bool reference = total_curvature(extend_coupling(sys, ZeroExtension{}), faces);
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            CHECK(total_curvature(extend_coupling(sys, RandomExtension{seed}), faces) == reference);
        }
    }
}

TEST_CASE("moving defects") {
    const auto rosette = p3_rosette();
    const auto ext = extend_coupling(rosette, ZeroExtension{});
    const auto moved = move_defect(ext, 7);
    CHECK((moved.curvature ^ ext.curvature).count() == 2);
    CHECK(move_defect(moved, 7).values == ext.values);
    CHECK(move_defect(moved, 7).curvature == ext.curvature);
    CHECK(total_curvature(moved, all_faces(rosette.ambient())));
    CHECK_THROWS_AS((void)move_defect(ext, 0), std::invalid_argument);

    // On a sphere with free interior edges, toggles preserve frustration parity.
    const auto ico = icosahedron();
    const CouplingSystem loose(ico.ambient_ptr(), BitVector(30), BitVector(30));
    auto e = extend_coupling(loose, RandomExtension{3});
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        e = move_defect(e, rng() % 30);
        CHECK_FALSE(e.curvature.parity());
    }

    // Walk a defect along a row of a planar grid with free interior edges.
    const auto grid = necker_grid(6, 2);
    const auto rim = Subcomplex::surface_boundary(grid.ambient()).edges();
    const CouplingSystem framed(grid.ambient_ptr(), rim, BitVector(rim.size()));
    auto d = extend_coupling(framed, ExplicitExtension{{grid.ambient().face(0)[1], true}});
    CHECK(d.frustrated_faces() == std::vector<std::size_t>{0, 1});
    for (std::size_t k = 1; k < 4; ++k) {
        d = move_defect(d, grid.ambient().face(k)[1]);
        CHECK(d.frustrated_faces() == std::vector<std::size_t>{0, k + 1});
        CHECK_FALSE(total_curvature(d, all_faces(grid.ambient())));
    }
}

TEST_CASE("gear corner keeps its impossibility without the corner") {
    const auto corner = gear_corner(3);
    CHECK(classify(corner).level == Level::Impossibility);
    const auto verts = gear_corner_vertices(3);
    const auto reduced = without_vertices(corner, {verts.begin(), verts.end()});
    const auto c = classify(reduced);
    CHECK(c.level == Level::Impossibility);
    CHECK(holonomy(reduced, std::get<OddCycle>(c.witness).cycle));
}
