#include "bistable/z2/bit_vector.hpp"

#include <bit>
#include <stdexcept>

namespace bistable {

namespace {

constexpr std::size_t word_count(std::size_t bits) {
    return (bits + BitVector::word_bits - 1) / BitVector::word_bits;
}

} // namespace

BitVector::BitVector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

BitVector BitVector::ones(std::size_t length) {
    BitVector v(length);
    for (auto& w : v.words_) {
        w = ~word_type{0};
    }
    v.trim();
    return v;
}

BitVector BitVector::unit(std::size_t length, std::size_t index) {
    BitVector v(length);
    v.set(index);
    return v;
}

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
    BitVector v(bits.size());
    std::size_t i = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) {
            throw std::invalid_argument("BitVector::from_bits: entries must be 0 or 1");
        }
        v.set(i++, b == 1);
    }
    return v;
}

BitVector BitVector::from_bools(const std::vector<bool>& bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        v.set(i, bits[i]);
    }
    return v;
}

BitVector BitVector::from_support(std::size_t length, std::span<const std::size_t> support) {
    BitVector v(length);
    for (auto i : support) {
        v.set(i);
    }
    return v;
}

BitVector BitVector::from_support(std::size_t length, std::initializer_list<std::size_t> support) {
    return from_support(length, std::span<const std::size_t>(support.begin(), support.size()));
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("BitVector::from_string: expected only '0' and '1'");
        }
    }
    return v;
}

bool BitVector::get(std::size_t i) const {
    if (i >= length_) {
        throw std::out_of_range("BitVector::get: index " + std::to_string(i) + " out of range " +
                                std::to_string(length_));
    }
    return ((words_[i / word_bits] >> (i % word_bits)) & 1U) != 0;
}

void BitVector::set(std::size_t i, bool value) {
    if (i >= length_) {
        throw std::out_of_range("BitVector::set: index " + std::to_string(i) + " out of range " +
                                std::to_string(length_));
    }
    const word_type mask = word_type{1} << (i % word_bits);
    if (value) {
        words_[i / word_bits] |= mask;
    } else {
        words_[i / word_bits] &= ~mask;
    }
}

void BitVector::flip(std::size_t i) {
    if (i >= length_) {
        throw std::out_of_range("BitVector::flip: index " + std::to_string(i) + " out of range " +
                                std::to_string(length_));
    }
    words_[i / word_bits] ^= word_type{1} << (i % word_bits);
}

void BitVector::reset() {
    for (auto& w : words_) {
        w = 0;
    }
}

void BitVector::check_same_size(const BitVector& other) const {
    if (length_ != other.length_) {
        throw std::invalid_argument("BitVector: length mismatch (" + std::to_string(length_) + " vs " +
                                    std::to_string(other.length_) + ")");
    }
}

void BitVector::trim() {
    const std::size_t tail = length_ % word_bits;
    if (tail != 0 && !words_.empty()) {
        words_.back() &= (word_type{1} << tail) - 1;
    }
}

BitVector& BitVector::operator^=(const BitVector& other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] |= other.words_[w];
    }
    return *this;
}

BitVector BitVector::operator~() const {
    BitVector v = *this;
    for (auto& w : v.words_) {
        w = ~w;
    }
    v.trim();
    return v;
}

bool BitVector::dot(const BitVector& other) const {
    check_same_size(other);
    word_type acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        acc ^= words_[w] & other.words_[w];
    }
    return (std::popcount(acc) & 1) != 0;
}

std::size_t BitVector::count() const {
    std::size_t n = 0;
    for (auto w : words_) {
        n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
}

bool BitVector::any() const {
    for (auto w : words_) {
        if (w != 0) {
            return true;
        }
    }
    return false;
}

bool BitVector::is_subset_of(const BitVector& other) const {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & ~other.words_[w]) != 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        word_type bits = words_[w];
        while (bits != 0) {
            out.push_back(w * word_bits + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::optional<std::size_t> BitVector::first_set() const {
    return next_set(0);
}

std::optional<std::size_t> BitVector::next_set(std::size_t from) const {
    if (from >= length_) {
        return std::nullopt;
    }
    std::size_t w = from / word_bits;
    word_type bits = words_[w] & (~word_type{0} << (from % word_bits));
    while (true) {
        if (bits != 0) {
            return w * word_bits + static_cast<std::size_t>(std::countr_zero(bits));
        }
        if (++w == words_.size()) {
            return std::nullopt;
        }
        bits = words_[w];
    }
}

std::string BitVector::to_string() const {
    std::string s(length_, '0');
    for (auto i : support()) {
        s[i] = '1';
    }
    return s;
}

std::vector<int> BitVector::to_ints() const {
    std::vector<int> out(length_, 0);
    for (auto i : support()) {
        out[i] = 1;
    }
    return out;
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) {
        return c;
    }
    // Lexicographic on coordinates, index 0 most significant.
    for (std::size_t i = 0; i < a.length_; ++i) {
        const bool x = a.get(i);
        const bool y = b.get(i);
        if (x != y) {
            return x ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

std::size_t BitVectorHash::operator()(const BitVector& v) const noexcept {
    std::size_t h = std::hash<std::size_t>{}(v.size());
    for (auto w : v.words()) {
        h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

} // namespace bistable
