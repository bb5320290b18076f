#pragma once

#include <cstdint>

#include "levnum/bitvec.hpp"
#include "levnum/gf2_matrix.hpp"
#include "levnum/rational.hpp"

// The Pascal parity matrix P = (C(i+j, j) mod 2) and the identities riding
// on it: prefix sums, the D_m ones count, 8-fold decimation, the xi / kappa
// row identities, and the closed form for the selector value. Entries are
// evaluated with the carry criterion (C(i+j, j) is odd iff i AND j = 0);
// exact big-integer binomials serve as the independent oracle in the tests.

namespace levnum::pascal {

/// P entry: C(i+j, j) mod 2.
inline int entry(std::uint64_t i, std::uint64_t j) { return (i & j) == 0 ? 1 : 0; }

/// C(n, r) mod 2 with C(n, r) = 0 for r < 0 or r > n.
inline int binom_parity(std::int64_t n, std::int64_t r) {
    if (r < 0 || n < 0 || r > n) return 0;
    return ((static_cast<std::uint64_t>(n - r) & static_cast<std::uint64_t>(r)) == 0) ? 1 : 0;
}

/// Top-left 2^m x 2^m submatrix of P.
gf2::Gf2Matrix a_matrix(int m);

/// Coordinates of a block decomposition inside the 2^m column universe.
struct Coords {
    int m;  // column universe 2^m
    int t;  // block size, 1 <= t <= 2^m
    int k;  // row offset, 0 <= k, k + t <= 2^m
};

struct Blocks {
    gf2::Gf2Matrix a;   // t x t, rows k..k+t-1, columns 0..t-1
    gf2::Gf2Matrix b;   // t x (2^m - t), columns t..2^m-1
    gf2::BitVec c_row;  // row k+t, columns 0..t-1
    gf2::BitVec d_row;  // row k+t, columns t..2^m-1
    gf2::BitVec xi;     // (C(t,0), ..., C(t,t-1)) mod 2
};

/// Extracts A, B, c, d, xi at the given coordinates. Verifies that A is
/// regular and throws RegularityViolation if not.
Blocks submatrices(const Coords& c);

gf2::BitVec xi(int t);

struct BitPair {
    int lhs;
    int rhs;
    bool equal() const { return lhs == rhs; }
};

/// lhs = sum_{j=0}^{t} C(t,j) C(k+l+j, l), rhs = C(k+l, l-t), both mod 2.
BitPair verify_sum_identity(std::int64_t t, std::int64_t k, std::int64_t l);

enum class CorItem { a, b, c };

/// The three truncated variants of the sum identity; items a and b require
/// 0 <= l <= t-1.
BitPair verify_corollary(std::int64_t t, std::int64_t k, std::int64_t l, CorItem item);

/// lhs = sum_{j=1}^{u} C(i+j, j), rhs = C(i+1+u, u) + 1, both mod 2.
BitPair verify_prefix_sum(std::int64_t i, std::int64_t u);

/// The (14*2^(m-7)) x 2^(m-7) matrix with entries C(i+1+j, j)+1 mod 2 over
/// rows i in [2^(m-3) - 14*2^(m-7), 2^(m-3)). Materialized only for m <= 13.
gf2::Gf2Matrix d_matrix(int m);
std::uint64_t d_ones_enumerated(int m);           // m <= 13
std::uint64_t d_ones_column(int m, std::uint64_t col);  // no materialization
/// 14 * 2^(m-7) * 2^(m-7) * (1 - (3/4)^(m-7)) as an exact rational. Throws
/// if the value is not an integer (it always is; the check is deliberate).
Rational d_ones_formula(int m);

/// Block selector: `offset` all-zero 8-groups, then `groups` groups of
/// (1,0,...,0), then zeros. A trailing group may be cut off by the length as
/// long as its leading one still fits.
struct SelectorVec {
    int groups;      // number of (1,0,...,0) groups
    int offset = 1;  // index of the first such group
    gf2::BitVec expand(std::size_t len) const;
};

/// Inner product of Pascal row i with the expanded selector versus the same
/// product with row floor(i/8) and the collapsed selector.
BitPair verify_decimation(std::uint64_t i, const SelectorVec& sel);

/// The two row identities behind the selector closed form: c = xi * A, and
/// d = xi * B + r where r is row k+t restricted to the B columns, re-indexed
/// from zero.
struct RowIdentity {
    bool c_matches;
    bool d_matches;
};
RowIdentity verify_row_identity(const Coords& c);

/// c_{k+t,t} * A_{k,t}^{-1}; equals xi(t) and is independent of k.
gf2::BitVec prop1_kappa(const Coords& c);

/// (d - c A^{-1} B) * selector, evaluated through the GF(2) algebra and via
/// the closed form C(floor((k+t)/8) + 1 + v, v) + 1.
BitPair prop1_value(const Coords& c, int v);

}  // namespace levnum::pascal
