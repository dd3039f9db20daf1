#include "bistable/cohomology/cohomology.hpp"

#include <stdexcept>
#include <string>

namespace bistable {

namespace {

std::vector<std::size_t> cells_where(const BitVector& mask, bool value) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        if (mask.get(i) == value) {
            out.push_back(i);
        }
    }
    return out;
}

BitVector lift(const BitVector& compact, const std::vector<std::size_t>& cells, std::size_t length) {
    BitVector out(length);
    for (auto i : compact.support()) {
        out.set(cells[i]);
    }
    return out;
}

BitMatrix select_rows(const BitMatrix& m, const std::vector<std::size_t>& rows) {
    std::vector<BitVector> picked;
    picked.reserve(rows.size());
    for (auto r : rows) {
        picked.push_back(m.row(r));
    }
    return BitMatrix::from_rows(std::move(picked), m.cols());
}

// H^k of the cochain complex restricted to the cells where `keep[j]` is set
// in degree j; rows of δ^k are restricted to `rows_kept` in degree k+1.
CohomologyBasis restricted(const CellComplex& x, int k, const BitVector& cols_k, const BitVector& rows_k1,
                           const std::optional<BitVector>& cols_km1) {
    const auto n = x.cell_count(k);
    const auto cols = cells_where(cols_k, true);
    std::vector<BitVector> cycles;
    if (k < 2) {
        const auto delta = select_rows(coboundary_matrix(x, k), cells_where(rows_k1, true)).select_columns(cols);
        for (const auto& z : kernel_basis(delta)) {
            cycles.push_back(lift(z, cols, n));
        }
    } else {
        for (auto c : cols) {
            cycles.push_back(BitVector::unit(n, c));
        }
    }
    std::vector<BitVector> boundaries;
    if (k > 0) {
        const auto prev = cells_where(*cols_km1, true);
        const auto delta = coboundary_matrix(x, k - 1).select_columns(prev);
        for (const auto& b : image_basis(delta)) {
            boundaries.push_back(b & cols_k);
        }
    }
    return {k, QuotientBasis(cycles, boundaries, n)};
}

void check_degree(int k) {
    if (k < 0 || k > 2) {
        throw std::invalid_argument("cohomology: degree must be 0, 1 or 2, got " + std::to_string(k));
    }
}

BitVector all_cells(const CellComplex& x, int k) { return BitVector::ones(x.cell_count(k)); }

} // namespace

CohomologyBasis cohomology(const CellComplex& x, int k) {
    check_degree(k);
    std::optional<BitVector> prev;
    if (k > 0) {
        prev = all_cells(x, k - 1);
    }
    return restricted(x, k, all_cells(x, k), all_cells(x, k + 1), prev);
}

CohomologyBasis relative_cohomology(const CellComplex& x, const Subcomplex& a, int k) {
    check_degree(k);
    std::optional<BitVector> prev;
    if (k > 0) {
        prev = ~a.mask(k - 1);
    }
    // A (k+1)-cell of A has its whole boundary in A, so δ of a relative
    // cochain already vanishes there; keeping all rows is harmless.
    return restricted(x, k, ~a.mask(k), all_cells(x, k + 1), prev);
}

CohomologyBasis subcomplex_cohomology(const CellComplex& x, const Subcomplex& a, int k) {
    check_degree(k);
    std::optional<BitVector> prev;
    if (k > 0) {
        prev = a.mask(k - 1);
    }
    const auto rows = k < 2 ? a.mask(k + 1) : BitVector(0);
    return restricted(x, k, a.mask(k), rows, prev);
}

BitVector restrict_to(const Subcomplex& a, int k, const BitVector& cochain) {
    return cochain & a.mask(k);
}

RelativeClass connecting(const CellComplex& x, const Subcomplex& a, int k, const BitVector& cocycle_on_a,
                         const std::optional<BitVector>& extension) {
    if (k < 0 || k > 1) {
        throw std::invalid_argument("connecting: degree must be 0 or 1");
    }
    if (cocycle_on_a.size() != x.cell_count(k)) {
        throw std::invalid_argument("connecting: cochain has wrong length");
    }
    if (!cocycle_on_a.is_subset_of(a.mask(k))) {
        throw std::invalid_argument("connecting: cochain is not supported on the subcomplex");
    }
    if ((coboundary(x, k, cocycle_on_a) & a.mask(k + 1)).any()) {
        throw std::invalid_argument("connecting: input is not a cocycle on the subcomplex");
    }
    BitVector ext = cocycle_on_a;
    if (extension) {
        if (extension->size() != ext.size() || (*extension & a.mask(k)) != cocycle_on_a) {
            throw std::invalid_argument("connecting: extension does not agree with the input on the subcomplex");
        }
        ext = *extension;
    }
    RelativeClass out;
    out.degree = k + 1;
    out.representative = coboundary(x, k, ext);
    out.coordinates = relative_cohomology(x, a, k + 1).coordinates(out.representative);
    return out;
}

CupProduct cup_product(const DeltaComplex& t, const BitVector& alpha, const BitVector& beta) {
    const auto& x = t.complex;
    if (!x.is_closed_surface()) {
        throw std::invalid_argument("cup_product: fundamental class undefined (not a closed surface)");
    }
    if (alpha.size() != x.edge_count() || beta.size() != x.edge_count()) {
        throw std::invalid_argument("cup_product: cochain length does not match the refined edges");
    }
    if (coboundary(x, 1, alpha).any() || coboundary(x, 1, beta).any()) {
        throw std::invalid_argument("cup_product: arguments must be 1-cocycles");
    }
    CupProduct out{BitVector(t.triangles.size()), false};
    for (std::size_t i = 0; i < t.triangles.size(); ++i) {
        const auto& tri = t.triangles[i];
        if (alpha.get(tri.e[0]) && beta.get(tri.e[1])) {
            out.representative.set(i);
        }
    }
    out.pairing = out.representative.parity();
    return out;
}

} // namespace bistable
