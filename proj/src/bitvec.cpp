#include "levnum/bitvec.hpp"

#include <stdexcept>

#include "levnum/kernels.hpp"

namespace levnum::gf2 {

BitVec::BitVec(std::initializer_list<int> bits) : BitVec(bits.size()) {
    std::size_t i = 0;
    for (int b : bits) set(i++, b != 0);
}

BitVec BitVec::from_bits(const std::vector<int>& bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, bits[i] != 0);
    return v;
}

void BitVec::set(std::size_t i, bool v) {
    if (i >= len_) throw std::out_of_range("BitVec: index beyond length");
    std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (v)
        words_[i / 64] |= mask;
    else
        words_[i / 64] &= ~mask;
}

int BitVec::dot(const BitVec& o) const {
    if (len_ != o.len_) throw std::invalid_argument("BitVec: dot length mismatch");
    return static_cast<int>(kern::active().and_popcount(words_.data(), o.words_.data(), words_.size()) & 1u);
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (len_ != o.len_) throw std::invalid_argument("BitVec: xor length mismatch");
    kern::active().xor_words(words_.data(), o.words_.data(), words_.size());
    return *this;
}

std::uint64_t BitVec::popcount() const { return kern::active().popcount(words_.data(), words_.size()); }

std::string BitVec::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

}  // namespace levnum::gf2
