#include "bistable/z2/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace bistable {

namespace {

// Gauss-Jordan on a working copy. Rows carry an optional right-hand side bit
// and an optional record of which original rows were combined.
struct Elimination {
    std::vector<BitVector> rows;
    std::vector<bool> rhs;
    std::vector<BitVector> history;
    std::vector<std::size_t> pivot_cols; // pivot column of row i, i < rank
    std::size_t rank = 0;
};

Elimination eliminate(const BitMatrix& m, const BitVector* b, bool track_history) {
    Elimination e;
    e.rows = m.row_vectors();
    e.rhs.assign(m.rows(), false);
    if (b != nullptr) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            e.rhs[r] = b->get(r);
        }
    }
    if (track_history) {
        e.history.reserve(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) {
            e.history.push_back(BitVector::unit(m.rows(), r));
        }
    }

    std::size_t next = 0;
    for (std::size_t c = 0; c < m.cols() && next < m.rows(); ++c) {
        std::size_t p = next;
        while (p < m.rows() && !e.rows[p].get(c)) {
            ++p;
        }
        if (p == m.rows()) {
            continue;
        }
        if (p != next) {
            std::swap(e.rows[p], e.rows[next]);
            std::swap(e.rhs[p], e.rhs[next]);
            if (track_history) {
                std::swap(e.history[p], e.history[next]);
            }
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != next && e.rows[r].get(c)) {
                e.rows[r] ^= e.rows[next];
                e.rhs[r] = e.rhs[r] != e.rhs[next];
                if (track_history) {
                    e.history[r] ^= e.history[next];
                }
            }
        }
        e.pivot_cols.push_back(c);
        ++next;
    }
    e.rank = next;
    return e;
}

std::vector<BitVector> kernel_from(const Elimination& e, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivot_cols) {
        is_pivot[c] = true;
    }
    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        BitVector v(cols);
        v.set(f);
        for (std::size_t i = 0; i < e.rank; ++i) {
            if (e.rows[i].get(f)) {
                v.set(e.pivot_cols[i]);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

std::size_t rank(const BitMatrix& m) {
    return eliminate(m, nullptr, false).rank;
}

std::size_t rank(std::span<const BitVector> vectors) {
    if (vectors.empty()) {
        return 0;
    }
    return rank(BitMatrix::from_rows({vectors.begin(), vectors.end()}));
}

AffineSolution solve_affine(const BitMatrix& m, const BitVector& b) {
    if (b.size() != m.rows()) {
        throw std::invalid_argument("solve_affine: right-hand side has length " + std::to_string(b.size()) +
                                    " but matrix has " + std::to_string(m.rows()) + " rows");
    }
    const auto e = eliminate(m, &b, true);
    AffineSolution out;
    for (std::size_t r = e.rank; r < m.rows(); ++r) {
        if (e.rhs[r]) {
            out.certificate = e.history[r];
            return out;
        }
    }
    BitVector x(m.cols());
    for (std::size_t i = 0; i < e.rank; ++i) {
        x.set(e.pivot_cols[i], e.rhs[i]);
    }
    out.solution = std::move(x);
    out.kernel = kernel_from(e, m.cols());
    return out;
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
    return kernel_from(eliminate(m, nullptr, false), m.cols());
}

std::vector<BitVector> image_basis(const BitMatrix& m) {
    // Pivot columns of the row-reduced form index independent columns of M.
    const auto e = eliminate(m, nullptr, false);
    std::vector<BitVector> out;
    out.reserve(e.rank);
    for (auto c : e.pivot_cols) {
        out.push_back(m.column(c));
    }
    return out;
}

QuotientBasis::QuotientBasis(std::span<const BitVector> cycles, std::span<const BitVector> boundaries,
                             std::size_t ambient_dimension)
    : ambient_(ambient_dimension) {
    for (const auto& v : cycles) {
        if (v.size() != ambient_) {
            throw std::invalid_argument("quotient_basis: cycle vector has wrong length");
        }
    }
    for (const auto& v : boundaries) {
        if (v.size() != ambient_) {
            throw std::invalid_argument("quotient_basis: boundary vector has wrong length");
        }
    }

    const std::size_t max_reps = cycles.size();
    auto insert = [&](const BitVector& v, std::optional<std::size_t> rep_index) -> bool {
        BitVector combo(max_reps);
        auto residual = reduce(v, &combo);
        if (!residual) {
            return false;
        }
        if (rep_index) {
            combo.flip(*rep_index);
        }
        const auto pivot = *residual->first_set();
        echelon_.push_back({std::move(*residual), pivot, std::move(combo)});
        return true;
    };

    for (const auto& bvec : boundaries) {
        insert(bvec, std::nullopt);
    }
    const std::size_t boundary_rank = echelon_.size();
    for (const auto& z : cycles) {
        if (insert(z, representatives_.size())) {
            representatives_.push_back(z);
        }
    }

    if (rank(cycles) != boundary_rank + representatives_.size()) {
        throw std::invalid_argument("quotient_basis: span(B) is not contained in span(Z)");
    }

    for (auto& row : echelon_) {
        BitVector trimmed(representatives_.size());
        for (auto i : row.combination.support()) {
            trimmed.set(i);
        }
        row.combination = std::move(trimmed);
    }
}

std::optional<BitVector> QuotientBasis::reduce(BitVector v, BitVector* combination) const {
    for (const auto& row : echelon_) {
        if (v.get(row.pivot)) {
            v ^= row.row;
            if (combination != nullptr) {
                for (auto i : row.combination.support()) {
                    combination->flip(i);
                }
            }
        }
    }
    if (v.none()) {
        return std::nullopt;
    }
    return v;
}

bool QuotientBasis::in_span(const BitVector& v) const {
    if (v.size() != ambient_) {
        return false;
    }
    return !reduce(v, nullptr).has_value();
}

BitVector QuotientBasis::coordinates(const BitVector& v) const {
    if (v.size() != ambient_) {
        throw std::invalid_argument("quotient_basis: vector has wrong length");
    }
    BitVector combo(representatives_.size());
    if (reduce(v, &combo)) {
        throw std::invalid_argument("quotient_basis: vector is not in span(Z)");
    }
    return combo;
}

BitVector QuotientBasis::representative_of(const BitVector& coords) const {
    if (coords.size() != representatives_.size()) {
        throw std::invalid_argument("quotient_basis: coordinate vector has wrong length");
    }
    BitVector v(ambient_);
    for (auto i : coords.support()) {
        v ^= representatives_[i];
    }
    return v;
}

} // namespace bistable
