#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bistable/z2/bit_matrix.hpp"
#include "bistable/z2/bit_vector.hpp"

namespace bistable {

/// GF(2) row rank.
[[nodiscard]] std::size_t rank(const BitMatrix& m);
[[nodiscard]] std::size_t rank(std::span<const BitVector> vectors);

/// Result of solving Mx = b.
///
/// Exactly one of `solution` and `certificate` is engaged. When solvable the
/// full solution set is `solution + span(kernel)`. When unsolvable,
/// `certificate` is a row combination y with yᵀM = 0 and yᵀb = 1.
struct AffineSolution {
    std::optional<BitVector> solution;
    std::vector<BitVector> kernel;
    std::optional<BitVector> certificate;

    [[nodiscard]] bool solvable() const { return solution.has_value(); }
};

/// Gauss-Jordan elimination with pivot = lowest-index nonzero column and free
/// variables set to zero, so the particular solution is deterministic.
/// Throws std::invalid_argument when b.size() != m.rows().
[[nodiscard]] AffineSolution solve_affine(const BitMatrix& m, const BitVector& b);

/// Basis of {v : Mv = 0}; size is cols - rank.
[[nodiscard]] std::vector<BitVector> kernel_basis(const BitMatrix& m);

/// Linearly independent columns spanning the column space of M.
[[nodiscard]] std::vector<BitVector> image_basis(const BitMatrix& m);

/// Basis of span(Z)/span(B) with a coordinate map.
///
/// Representatives are drawn from Z in input order: the first vector of Z that
/// is independent of span(B) and the earlier representatives is kept.
class QuotientBasis {
  public:
    QuotientBasis() = default;
    /// Throws std::invalid_argument if span(B) is not contained in span(Z) or
    /// the vectors do not share one length.
    QuotientBasis(std::span<const BitVector> cycles, std::span<const BitVector> boundaries,
                  std::size_t ambient_dimension);

    [[nodiscard]] std::size_t dimension() const { return representatives_.size(); }
    [[nodiscard]] std::size_t ambient_dimension() const { return ambient_; }
    [[nodiscard]] const std::vector<BitVector>& representatives() const { return representatives_; }

    [[nodiscard]] bool in_span(const BitVector& v) const;
    /// Coordinates of the class of v. Throws std::invalid_argument if v is
    /// not in span(Z).
    [[nodiscard]] BitVector coordinates(const BitVector& v) const;
    /// Sum of representatives selected by the coordinate vector.
    [[nodiscard]] BitVector representative_of(const BitVector& coords) const;

  private:
    struct EchelonRow {
        BitVector row;
        std::size_t pivot;
        BitVector combination; // over representatives
    };

    std::optional<BitVector> reduce(BitVector v, BitVector* combination) const;

    std::size_t ambient_ = 0;
    std::vector<BitVector> representatives_;
    std::vector<EchelonRow> echelon_;
};

} // namespace bistable
