#include "bistable/z2/bit_matrix.hpp"

#include <stdexcept>

namespace bistable {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
    for (const auto& r : rows) {
        if (r.size() != cols) {
            throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
        }
    }
    BitMatrix m;
    m.rows_ = rows.size();
    m.cols_ = cols;
    m.data_ = std::move(rows);
    return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows) {
    if (rows.empty()) {
        throw std::invalid_argument("BitMatrix::from_rows: column count needed for empty matrix");
    }
    const auto cols = rows.front().size();
    return from_rows(std::move(rows), cols);
}

BitMatrix BitMatrix::from_columns(std::span<const BitVector> columns, std::size_t rows) {
    BitMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) {
            throw std::invalid_argument("BitMatrix::from_columns: ragged columns");
        }
        for (auto r : columns[c].support()) {
            m.set(r, c);
        }
    }
    return m;
}

BitVector BitMatrix::column(std::size_t c) const {
    if (c >= cols_) {
        throw std::out_of_range("BitMatrix::column");
    }
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (data_[r].get(c)) {
            v.set(r);
        }
    }
    return v;
}

BitVector BitMatrix::operator*(const BitVector& v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("BitMatrix: dimension mismatch in matrix-vector product (" +
                                    std::to_string(cols_) + " columns, vector of " +
                                    std::to_string(v.size()) + ")");
    }
    BitVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (data_[r].dot(v)) {
            out.set(r);
        }
    }
    return out;
}

BitMatrix BitMatrix::operator*(const BitMatrix& other) const {
    if (cols_ != other.rows_) {
        throw std::invalid_argument("BitMatrix: dimension mismatch in matrix product");
    }
    BitMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (auto k : data_[r].support()) {
            out.data_[r] ^= other.data_[k];
        }
    }
    return out;
}

BitVector BitMatrix::left_multiply(const BitVector& y) const {
    if (y.size() != rows_) {
        throw std::invalid_argument("BitMatrix: dimension mismatch in row-vector product");
    }
    BitVector out(cols_);
    for (auto r : y.support()) {
        out ^= data_[r];
    }
    return out;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (auto c : data_[r].support()) {
            t.set(c, r);
        }
    }
    return t;
}

BitMatrix BitMatrix::select_columns(std::span<const std::size_t> cols) const {
    BitMatrix out(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (data_[r].get(cols[j])) {
                out.set(r, j);
            }
        }
    }
    return out;
}

bool BitMatrix::is_zero() const {
    for (const auto& r : data_) {
        if (r.any()) {
            return false;
        }
    }
    return true;
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (const auto& r : data_) {
        s += r.to_string();
        s += '\n';
    }
    return s;
}

} // namespace bistable
