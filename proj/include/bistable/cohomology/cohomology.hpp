#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bistable/complex/cell_complex.hpp"
#include "bistable/complex/delta_complex.hpp"
#include "bistable/complex/subcomplex.hpp"
#include "bistable/z2/linalg.hpp"

namespace bistable {

/// Basis of a cohomology group in degree k. Cochains are full-length vectors
/// over the k-cells of the ambient complex, also for relative groups and for
/// the cohomology of a subcomplex.
class CohomologyBasis {
  public:
    CohomologyBasis() = default;
    CohomologyBasis(int degree, QuotientBasis quotient) : degree_(degree), quotient_(std::move(quotient)) {}

    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] std::size_t dimension() const { return quotient_.dimension(); }
    [[nodiscard]] const std::vector<BitVector>& representatives() const { return quotient_.representatives(); }
    /// True for cocycles of the underlying cochain space.
    [[nodiscard]] bool contains(const BitVector& cochain) const { return quotient_.in_span(cochain); }
    /// Throws std::invalid_argument for vectors that are not cocycles.
    [[nodiscard]] BitVector coordinates(const BitVector& cocycle) const { return quotient_.coordinates(cocycle); }
    [[nodiscard]] BitVector representative_of(const BitVector& coords) const {
        return quotient_.representative_of(coords);
    }

  private:
    int degree_ = 0;
    QuotientBasis quotient_;
};

[[nodiscard]] CohomologyBasis cohomology(const CellComplex& x, int k);

/// H^k(X, A) on cochains vanishing on A.
[[nodiscard]] CohomologyBasis relative_cohomology(const CellComplex& x, const Subcomplex& a, int k);

/// H^k(A) on cochains supported on A.
[[nodiscard]] CohomologyBasis subcomplex_cohomology(const CellComplex& x, const Subcomplex& a, int k);

/// Zeroes a k-cochain off the cells of A.
[[nodiscard]] BitVector restrict_to(const Subcomplex& a, int k, const BitVector& cochain);

struct RelativeClass {
    int degree = 0;
    BitVector representative; // vanishes on A
    BitVector coordinates;    // in H^degree(X, A)

    [[nodiscard]] bool is_zero() const { return coordinates.none(); }
};

/// Connecting map δ*: H^k(A) -> H^{k+1}(X, A). The input is a k-cochain
/// supported on A that is a cocycle on A. It is extended by zero, or by
/// `extension` when given (which must agree with the input on A), and δ is
/// applied. Throws std::invalid_argument when the input is not a cocycle on A.
[[nodiscard]] RelativeClass connecting(const CellComplex& x, const Subcomplex& a, int k, const BitVector& cocycle_on_a,
                                       const std::optional<BitVector>& extension = std::nullopt);

struct CupProduct {
    BitVector representative; // 2-cochain on the triangles
    bool pairing = false;     // evaluation on the fundamental class
};

/// (α⌣β)(v0v1v2) = α(v0v1)·β(v1v2). Throws std::invalid_argument with
/// "fundamental class undefined" unless every refined edge lies in exactly
/// two triangles, and when α or β is not a cocycle.
[[nodiscard]] CupProduct cup_product(const DeltaComplex& t, const BitVector& alpha, const BitVector& beta);

} // namespace bistable
