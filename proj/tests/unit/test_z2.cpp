#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "bistable/builders/builders.hpp"
#include "bistable/z2/linalg.hpp"

using namespace bistable;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m.set(r, c, (rng() & 1U) != 0);
        }
    }
    return m;
}

} // namespace

TEST_CASE("bit vector basics") {
    auto v = BitVector::from_string("0110");
    CHECK(v.size() == 4);
    CHECK(v.count() == 2);
    CHECK((v ^ v).none());
    CHECK(v.support() == std::vector<std::size_t>{1, 2});
    CHECK(v.to_string() == "0110");
    CHECK(BitVector::from_bits({1, 0, 1}).dot(BitVector::from_bits({1, 1, 1})) == false);
    CHECK_THROWS_AS((void)(BitVector(3) ^ BitVector(4)), std::invalid_argument);

    // Words beyond the first and trailing-bit hygiene.
    auto big = BitVector::ones(130);
    CHECK(big.count() == 130);
    CHECK((~big).none());
    CHECK(big.next_set(64).value() == 64);
    big.set(129, false);
    CHECK(big.count() == 129);
}

TEST_CASE("rank examples") {
    CHECK(rank(BitMatrix::identity(3)) == 3);
    CHECK(rank(BitMatrix::from_rows({BitVector::from_bits({1, 1})})) == 1);
    const auto ring = gear_ring(7);
    CHECK(rank(coboundary_matrix(ring.ambient(), 0)) == 6);
}

TEST_CASE("solve_affine examples") {
    const auto m = BitMatrix::from_rows({BitVector::from_bits({1, 1}), BitVector::from_bits({0, 1})});
    auto s = solve_affine(m, BitVector::from_bits({1, 1}));
    REQUIRE(s.solvable());
    CHECK(*s.solution == BitVector::from_bits({0, 1}));
    CHECK(s.kernel.empty());

    s = solve_affine(BitMatrix::from_rows({BitVector::from_bits({1, 1})}), BitVector::from_bits({1}));
    REQUIRE(s.solvable());
    CHECK(*s.solution == BitVector::from_bits({1, 0}));
    REQUIRE(s.kernel.size() == 1);
    CHECK(s.kernel[0] == BitVector::from_bits({1, 1}));

    const auto ring = gear_ring(5);
    const auto d0 = coboundary_matrix(ring.ambient(), 0);
    s = solve_affine(d0, BitVector::ones(5));
    CHECK_FALSE(s.solvable());
    REQUIRE(s.certificate);
    CHECK(*s.certificate == BitVector::ones(5));

    CHECK_THROWS_AS((void)solve_affine(d0, BitVector(4)), std::invalid_argument);
}

TEST_CASE("kernel_basis examples") {
    CHECK(kernel_basis(BitMatrix::identity(2)).empty());
    CHECK(kernel_basis(BitMatrix(2, 3)).size() == 3);
    const auto torus = gear_torus(3, 3);
    const auto d1 = coboundary_matrix(torus.ambient(), 1);
    CHECK(kernel_basis(d1).size() == d1.cols() - rank(d1));
    // 18 columns: enumerate every edge cochain.
    CHECK((std::size_t{1} << kernel_basis(d1).size()) == oracle::kernel_size(d1));
}

TEST_CASE("random matrices agree with enumeration") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto rows = 1 + rng() % 16;
        const auto cols = 1 + rng() % 12;
        const auto m = random_matrix(rng, rows, cols);
        const auto r = rank(m);
        CHECK(r <= std::min(rows, cols));
        CHECK(r == oracle::rank(m));
        const auto kernel = kernel_basis(m);
        CHECK(r + kernel.size() == cols);
        for (const auto& k : kernel) {
            CHECK((m * k).none());
        }
        CHECK(rank(kernel) == kernel.size());

        const auto b = oracle::random_vector(rng, rows);
        const auto s = solve_affine(m, b);
        const auto brute = oracle::solutions(m, b);
        CHECK(s.solvable() == !brute.empty());
        if (s.solvable()) {
            CHECK(m * *s.solution == b);
            CHECK((std::size_t{1} << s.kernel.size()) == brute.size());
        } else {
            CHECK(m.left_multiply(*s.certificate).none());
            CHECK(s.certificate->dot(b));
        }
        CHECK(image_basis(m).size() == r);
    }
}

TEST_CASE("quotient basis") {
    const std::vector<BitVector> z{BitVector::from_bits({1, 0}), BitVector::from_bits({0, 1})};
    const std::vector<BitVector> b{BitVector::from_bits({1, 1})};
    QuotientBasis q(z, b, 2);
    CHECK(q.dimension() == 1);
    CHECK(q.coordinates(BitVector::from_bits({1, 1})).none());

    QuotientBasis same(z, z, 2);
    CHECK(same.dimension() == 0);
    CHECK(same.coordinates(BitVector::from_bits({1, 0})).size() == 0);

    const std::vector<BitVector> line{BitVector::from_bits({1, 0})};
    const std::vector<BitVector> off{BitVector::from_bits({0, 1})};
    CHECK_THROWS_AS(QuotientBasis(line, off, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)q.coordinates(BitVector(3)), std::invalid_argument);

    // Additivity of coordinates on random subspaces.
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<BitVector> cycles, boundaries;
        for (int i = 0; i < 6; ++i) {
            cycles.push_back(oracle::random_vector(rng, 10));
        }
        for (int i = 0; i < 3; ++i) {
            boundaries.push_back(cycles[rng() % 6] ^ cycles[rng() % 6]);
        }
        QuotientBasis qb(cycles, boundaries, 10);
        CHECK(qb.dimension() == rank(cycles) - rank(boundaries));
        const auto u = cycles[rng() % 6] ^ cycles[rng() % 6];
        const auto v = cycles[rng() % 6];
        CHECK((qb.coordinates(u) ^ qb.coordinates(v)) == qb.coordinates(u ^ v));
        for (const auto& bv : boundaries) {
            CHECK(qb.coordinates(bv).none());
        }
        for (std::size_t i = 0; i < qb.dimension(); ++i) {
            CHECK(qb.coordinates(qb.representatives()[i]) == BitVector::unit(qb.dimension(), i));
        }
    }
}
