#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "bistable/builders/builders.hpp"
#include "bistable/cohomology/cohomology.hpp"
#include "bistable/complex/delta_complex.hpp"
#include "bistable/complex/subcomplex.hpp"

using namespace bistable;

namespace {

CellComplex triangle() { return complex_from_polygons(3, {{0, 1, 2}}); }

} // namespace

TEST_CASE("validate") {
    CHECK(validate(triangle()).empty());

    const CellComplex open(3, {{0, 1}, {1, 2}, {0, 2}}, {{0, 1}});
    const auto v = validate(open);
    REQUIRE(v.size() == 1);
    CHECK(v[0].find("open face walk") != std::string::npos);

    CHECK_FALSE(validate(CellComplex(1, {{0, 0}})).empty());
    CHECK(validate(CellComplex(1, {{0, 0}}), {.allow_loops = true}).empty());
    CHECK_FALSE(validate(CellComplex(2, {{0, 3}})).empty());
    CHECK_FALSE(validate(CellComplex(3, {{0, 1}, {1, 2}, {0, 2}}, {{}})).empty());
    CHECK_FALSE(validate(CellComplex(2, {{0, 1}}, {{0, 0}})).empty());

    const auto torus = gear_torus(3, 3).ambient();
    CHECK(torus.vertex_count() == 9);
    CHECK(torus.edge_count() == 18);
    CHECK(torus.face_count() == 9);
    CHECK(validate(torus).empty());
    CHECK((boundary_matrix(torus, 1) * boundary_matrix(torus, 2)).is_zero());
}

TEST_CASE("boundary matrices") {
    const CellComplex edge(2, {{0, 1}});
    CHECK(boundary_matrix(edge, 1).column(0) == BitVector::from_bits({1, 1}));
    const auto square = complex_from_polygons(4, {{0, 1, 2, 3}});
    CHECK(boundary_matrix(square, 2).column(0).count() == 4);
    const auto ico = icosahedron().ambient();
    CHECK((boundary_matrix(ico, 1) * boundary_matrix(ico, 2)).is_zero());
    CHECK(coboundary_matrix(ico, 1) == boundary_matrix(ico, 2).transpose());
    CHECK_THROWS_AS((void)boundary_matrix(ico, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)coboundary_matrix(ico, -1), std::invalid_argument);
    CHECK(coboundary_matrix(ico, 2).rows() == 0);

    // Matrix and direct coboundary agree.
    std::mt19937_64 rng(3);
    for (int k = 0; k < 2; ++k) {
        const auto c = oracle::random_vector(rng, ico.cell_count(k));
        CHECK(coboundary(ico, k, c) == coboundary_matrix(ico, k) * c);
    }
}

TEST_CASE("euler characteristic") {
    CHECK(euler_characteristic(icosahedron().ambient()) == 2);
    for (std::size_t n = 2; n <= 4; ++n) {
        CHECK(euler_characteristic(gear_torus(n, n + 1).ambient()) == 0);
    }
    const auto dodeca = dodecahedral_sphere().ambient();
    CHECK(dodeca.vertex_count() == 20);
    CHECK(dodeca.edge_count() == 30);
    CHECK(dodeca.face_count() == 12);
    CHECK(euler_characteristic(dodeca) == 2);
}

TEST_CASE("subcomplex closure") {
    const auto x = triangle();
    CHECK_THROWS_AS(Subcomplex(x, BitVector(3), BitVector::from_bits({1, 0, 0}), BitVector(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(Subcomplex(x, BitVector::ones(3), BitVector(3), BitVector::ones(1)), std::invalid_argument);
    const std::vector<std::size_t> faces{0};
    const auto boundary = Subcomplex::boundary_of(x, faces);
    CHECK(boundary.edges().count() == 3);
    CHECK(boundary.vertices().count() == 3);
    CHECK(boundary.faces().none());
    CHECK(Subcomplex::surface_boundary(x) == boundary);
    CHECK(Subcomplex::surface_boundary(icosahedron().ambient()).is_empty());
}

TEST_CASE("triangulate") {
    const auto tri = triangulate(triangle());
    CHECK(tri.triangles.size() == 1);
    CHECK(tri.pullback1 == BitMatrix::identity(3));

    const auto sq = triangulate(complex_from_polygons(4, {{0, 1, 2, 3}}));
    CHECK(sq.triangles.size() == 2);
    CHECK(sq.complex.edge_count() == 5);

    const auto torus = gear_torus(3, 3).ambient();
    const auto t = triangulate(torus);
    CHECK(t.triangles.size() == 18);
    CHECK(t.complex.edge_count() == 27);
    CHECK(euler_characteristic(t.complex) == 0);
    CHECK(validate(t.complex).empty());
    CHECK(t.complex.is_closed_surface());
    for (const auto& tr : t.triangles) {
        CHECK(tr.v[0] < tr.v[1]);
        CHECK(tr.v[1] < tr.v[2]);
        CHECK(t.complex.edge(tr.e[0]).touches(tr.v[0]));
        CHECK(t.complex.edge(tr.e[0]).touches(tr.v[1]));
        CHECK(t.complex.edge(tr.e[1]).touches(tr.v[1]));
        CHECK(t.complex.edge(tr.e[1]).touches(tr.v[2]));
        CHECK(t.complex.edge(tr.e[2]).touches(tr.v[0]));
        CHECK(t.complex.edge(tr.e[2]).touches(tr.v[2]));
    }

    CHECK_THROWS_WITH_AS((void)triangulate(CellComplex(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}},
                                                       {{0, 1, 2, 3, 4, 5}})),
                         doctest::Contains("non-simple face; pre-subdivide"), std::invalid_argument);
}

TEST_CASE("pullback commutes with coboundary and preserves classes") {
    std::mt19937_64 rng(17);
    for (const auto& sys : {gear_torus(3, 4), gear_torus(2, 2), dodecahedral_sphere(), heptagonal_patch(1),
                            lozenge_patch(5, 4), gear_corner(3), rp2_minimal()}) {
        const auto& x = sys.ambient();
        const auto t = triangulate(x);
        CHECK(euler_characteristic(t.complex) == euler_characteristic(x));
        for (int trial = 0; trial < 10; ++trial) {
            const auto c0 = oracle::random_vector(rng, x.vertex_count());
            CHECK(pull_back(t, 1, coboundary(x, 0, c0)) == coboundary(t.complex, 0, pull_back(t, 0, c0)));
            const auto c1 = oracle::random_vector(rng, x.edge_count());
            CHECK(pull_back(t, 2, coboundary(x, 1, c1)) == coboundary(t.complex, 1, pull_back(t, 1, c1)));
        }
        // Induced map on H¹ is an isomorphism.
        const auto h_parent = cohomology(x, 1);
        const auto h_refined = cohomology(t.complex, 1);
        REQUIRE(h_parent.dimension() == h_refined.dimension());
        std::vector<BitVector> images;
        for (const auto& z : h_parent.representatives()) {
            images.push_back(h_refined.coordinates(pull_back(t, 1, z)));
        }
        CHECK(rank(images) == h_parent.dimension());
    }
}
