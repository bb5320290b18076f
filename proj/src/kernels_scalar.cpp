#include "levnum/kernels.hpp"

#include <bit>

namespace levnum::kern {

namespace {

void xor_words_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

std::uint64_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

std::uint64_t popcount_scalar(const std::uint64_t* a, std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i]);
    return total;
}

}  // namespace

const Ops& scalar() {
    static const Ops ops{&xor_words_scalar, &and_popcount_scalar, &popcount_scalar, "scalar"};
    return ops;
}

}  // namespace levnum::kern
