#pragma once

#include <cstdint>
#include <vector>

#include "levnum/bigint.hpp"

// Random access into the binary expansion of Levin's normal number. The
// expansion is a concatenation of blocks; block m holds 2^m * 2^(2^m) digits
// arranged in sub-blocks of 2^m digits, one per counter value n, with digit
// k of sub-block n the GF(2) inner product of Pascal parity row k with the
// bits of n. Digits are computed on demand (blocks beyond m = 4 cannot be
// materialized); a bitmap cache of blocks 1..4 backs the prefix sweeps.

namespace levnum::levin {

/// First digit position of block m is block_start(m) + 1.
BigUint block_start(int m);  // n_1 = 0, n_2 = 8, n_3 = 72, ...

/// 2^m * 2^(2^m), the digit count of block m.
BigUint block_digit_count(int m);

struct DyadicFraction {
    BigUint num;             // 0 <= num < 2^precision
    unsigned precision = 0;  // value = num / 2^precision
};

struct Origin {
    BigUint start;           // orbit index of the first point
    std::uint64_t count = 0;
};

/// Finite ordered multiset of dyadic fractions of common precision.
/// Generation order is preserved; sorting is an explicit step done by the
/// consumers that need it.
struct PointSet {
    unsigned precision = 0;
    std::vector<BigUint> nums;
    Origin origin;
};

struct IndexParts {
    int m;             // block
    BigUint n;         // sub-block counter, 0 <= n < 2^(2^m)
    std::uint32_t k;   // offset inside the sub-block, 0 <= k < 2^m
};

class Digits {
  public:
    /// m_max bounds the blocks addressable through at(); point extraction
    /// may reach one block further (digit windows spill across the block
    /// boundary).
    explicit Digits(int m_max = 5);

    int m_max() const { return m_max_; }

    /// Splits a 1-based digit position into (m, n, k).
    static IndexParts decompose(const BigUint& index1);

    /// Digit at the given 1-based position; throws IndexBeyondRange past
    /// block m_max.
    int at(const BigUint& index1) const;
    int at(std::uint64_t index1) const { return at(BigUint{index1}); }

    /// P-bit truncation of {2^n alpha}: digits n+1 .. n+P, most significant
    /// first.
    DyadicFraction point(const BigUint& orbit_index, unsigned precision) const;

    /// Points {2^(n_m + 2^m n + k) alpha} for n in [n_lo, n_hi), k in
    /// [k_lo, k_hi), lexicographic in (n, k).
    PointSet block_points(int m, std::uint64_t n_lo, std::uint64_t n_hi, std::uint32_t k_lo,
                          std::uint32_t k_hi, unsigned precision) const;

    std::size_t cache_bits() const { return cache_bits_; }

    /// Sequential digit reader. Serves from the prefix cache while inside
    /// it, then generates sub-blocks on the fly, crossing block boundaries
    /// transparently.
    class Stream {
      public:
        Stream(const Digits& d, BigUint pos1);
        int next();

      private:
        void refill();
        void advance_counter();
        const Digits* d_;
        std::uint64_t buf_ = 0;
        int buf_left_ = 0;
        // cache cursor
        std::size_t cache_pos_ = 0;
        bool in_cache_ = false;
        // generated cursor
        int m_ = 0;
        std::uint32_t k_ = 0;
        std::vector<std::uint64_t> sub_;      // packed digits of the current sub-block
        std::vector<std::uint64_t> n_words_;  // counter bits, padded to the row width
    };

    Stream stream_at(const BigUint& pos1) const { return Stream(*this, pos1); }

  private:
    friend class Stream;
    const std::vector<std::uint64_t>& row_table(int m) const;
    void generate_subblock(int m, const std::vector<std::uint64_t>& n_words,
                           std::vector<std::uint64_t>& out) const;

    int m_max_;
    std::size_t cache_bits_ = 0;
    std::vector<std::uint64_t> cache_;
    std::vector<std::vector<std::uint64_t>> row_tables_;  // per m, built in the constructor
};

/// Digit of the binary Champernowne word 0.(1)(10)(11)(100)...; comparison
/// stream for the CLI.
int champernowne_digit(std::uint64_t index1);

}  // namespace levnum::levin
