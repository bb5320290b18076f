#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// Word-level kernels behind the bit-packed GF(2) types. Each kernel has a
// scalar reference implementation and, on x86-64, an AVX2 variant; the
// active table is chosen once at runtime. The variants are equivalence
// tested against the scalar reference.

namespace levnum::kern {

struct Ops {
    // dst[i] ^= src[i] for i < n
    void (*xor_words)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
    // sum of popcount(a[i] & b[i])
    std::uint64_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
    // sum of popcount(a[i])
    std::uint64_t (*popcount)(const std::uint64_t* a, std::size_t n);
    const char* name;
};

/// Portable reference implementation.
const Ops& scalar();

/// Best implementation supported by the running CPU.
const Ops& active();

/// Every implementation usable on this machine (scalar first).
std::vector<const Ops*> supported();

}  // namespace levnum::kern
