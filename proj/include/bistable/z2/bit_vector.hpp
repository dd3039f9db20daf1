#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bistable {

/// Word-packed vector over the two-element field. Addition is XOR.
///
/// Bits past `size()` in the last word are kept at zero so that word-level
/// comparisons, popcounts and hashes are exact.
class BitVector {
  public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t length);

    static BitVector ones(std::size_t length);
    static BitVector unit(std::size_t length, std::size_t index);
    static BitVector from_bits(std::initializer_list<int> bits);
    static BitVector from_bools(const std::vector<bool>& bits);
    static BitVector from_support(std::size_t length, std::span<const std::size_t> support);
    static BitVector from_support(std::size_t length, std::initializer_list<std::size_t> support);
    /// Parses a string of '0'/'1' characters, index 0 first.
    static BitVector from_string(std::string_view bits);

    [[nodiscard]] std::size_t size() const { return length_; }
    [[nodiscard]] bool empty() const { return length_ == 0; }

    [[nodiscard]] bool get(std::size_t i) const;
    [[nodiscard]] bool operator[](std::size_t i) const { return get(i); }
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i);
    void reset();

    BitVector& operator^=(const BitVector& other);
    BitVector& operator&=(const BitVector& other);
    BitVector& operator|=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
    [[nodiscard]] BitVector operator~() const;

    /// GF(2) inner product: parity of the common support.
    [[nodiscard]] bool dot(const BitVector& other) const;

    [[nodiscard]] std::size_t count() const;
    [[nodiscard]] bool parity() const { return (count() & 1U) != 0; }
    [[nodiscard]] bool any() const;
    [[nodiscard]] bool none() const { return !any(); }
    /// True when every set bit of *this is also set in `other`.
    [[nodiscard]] bool is_subset_of(const BitVector& other) const;

    [[nodiscard]] std::vector<std::size_t> support() const;
    [[nodiscard]] std::optional<std::size_t> first_set() const;
    [[nodiscard]] std::optional<std::size_t> next_set(std::size_t from) const;

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::vector<int> to_ints() const;

    [[nodiscard]] std::span<const word_type> words() const { return words_; }

    friend bool operator==(const BitVector&, const BitVector&) = default;
    friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b);

  private:
    void check_same_size(const BitVector& other) const;
    void trim();

    std::size_t length_ = 0;
    std::vector<word_type> words_;
};

struct BitVectorHash {
    std::size_t operator()(const BitVector& v) const noexcept;
};

} // namespace bistable
