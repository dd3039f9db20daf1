#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bistable/z2/bit_vector.hpp"

namespace bistable {

/// Dense row-major matrix over the two-element field.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    /// All rows must share one length; `cols` is needed when `rows` is empty.
    static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols);
    static BitMatrix from_rows(std::vector<BitVector> rows);
    static BitMatrix from_columns(std::span<const BitVector> columns, std::size_t rows);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    [[nodiscard]] bool get(std::size_t r, std::size_t c) const { return data_.at(r).get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { data_.at(r).set(c, value); }
    void flip(std::size_t r, std::size_t c) { data_.at(r).flip(c); }

    [[nodiscard]] const BitVector& row(std::size_t r) const { return data_.at(r); }
    [[nodiscard]] BitVector column(std::size_t c) const;
    [[nodiscard]] const std::vector<BitVector>& row_vectors() const { return data_; }

    /// Matrix-vector product: AND then XOR-fold per row.
    [[nodiscard]] BitVector operator*(const BitVector& v) const;
    [[nodiscard]] BitMatrix operator*(const BitMatrix& other) const;
    /// Row-vector product yᵀM.
    [[nodiscard]] BitVector left_multiply(const BitVector& y) const;

    [[nodiscard]] BitMatrix transpose() const;
    [[nodiscard]] BitMatrix select_columns(std::span<const std::size_t> cols) const;
    [[nodiscard]] bool is_zero() const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVector> data_;
};

} // namespace bistable
