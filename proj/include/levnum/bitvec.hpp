#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace levnum::gf2 {

/// Fixed-length bit vector over GF(2), packed into 64-bit words.
/// Bits beyond the length are kept zero; the length never changes after
/// construction.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}
    BitVec(std::initializer_list<int> bits);
    static BitVec from_bits(const std::vector<int>& bits);

    std::size_t len() const { return len_; }
    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i, bool v);

    /// Inner product over GF(2).
    int dot(const BitVec& o) const;
    /// XOR accumulate; lengths must match.
    BitVec& operator^=(const BitVec& o);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    std::uint64_t popcount() const;
    bool is_zero() const { return popcount() == 0; }

    bool operator==(const BitVec& o) const = default;

    const std::uint64_t* words() const { return words_.data(); }
    std::uint64_t* words() { return words_.data(); }
    std::size_t word_count() const { return words_.size(); }

    std::string to_string() const;  // e.g. "1011"

  private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace levnum::gf2
