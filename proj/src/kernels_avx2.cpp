// AVX2 variants of the word kernels. This translation unit is compiled with
// -mavx2 -mpopcnt and must only be entered after a runtime CPU check.

#include "levnum/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace levnum::kern {

namespace {

void xor_words_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

std::uint64_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i v = _mm256_and_si256(va, vb);
        total += static_cast<std::uint64_t>(_mm_popcnt_u64(_mm256_extract_epi64(v, 0)));
        total += static_cast<std::uint64_t>(_mm_popcnt_u64(_mm256_extract_epi64(v, 1)));
        total += static_cast<std::uint64_t>(_mm_popcnt_u64(_mm256_extract_epi64(v, 2)));
        total += static_cast<std::uint64_t>(_mm_popcnt_u64(_mm256_extract_epi64(v, 3)));
    }
    for (; i < n; ++i) total += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i] & b[i]));
    return total;
}

std::uint64_t popcount_avx2(const std::uint64_t* a, std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i]));
    return total;
}

}  // namespace

const Ops& avx2_ops() {
    static const Ops ops{&xor_words_avx2, &and_popcount_avx2, &popcount_avx2, "avx2"};
    return ops;
}

}  // namespace levnum::kern

#endif  // x86-64
