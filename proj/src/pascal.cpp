#include "levnum/pascal.hpp"

#include <stdexcept>
#include <string>

#include "levnum/errors.hpp"

namespace levnum::pascal {

namespace {

void validate(const Coords& c) {
    if (c.m < 1 || c.m > 30) throw std::invalid_argument("pascal: m out of range");
    std::int64_t size = std::int64_t{1} << c.m;
    if (c.t < 1 || c.t > size) throw std::invalid_argument("pascal: t out of range");
    if (c.k < 0 || c.k + c.t > size) throw std::invalid_argument("pascal: k out of range");
}

}  // namespace

gf2::Gf2Matrix a_matrix(int m) {
    std::size_t n = std::size_t{1} << m;
    gf2::Gf2Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (entry(i, j)) out.set(i, j, true);
    return out;
}

Blocks submatrices(const Coords& c) {
    validate(c);
    std::size_t size = std::size_t{1} << c.m;
    std::size_t t = static_cast<std::size_t>(c.t);
    std::size_t k = static_cast<std::size_t>(c.k);
    Blocks out{gf2::Gf2Matrix(t, t), gf2::Gf2Matrix(t, size - t), gf2::BitVec(t), gf2::BitVec(size - t),
               xi(c.t)};
    for (std::size_t r = 0; r < t; ++r) {
        for (std::size_t j = 0; j < t; ++j)
            if (entry(k + r, j)) out.a.set(r, j, true);
        for (std::size_t j = t; j < size; ++j)
            if (entry(k + r, j)) out.b.set(r, j - t, true);
    }
    for (std::size_t j = 0; j < t; ++j) out.c_row.set(j, entry(k + t, j));
    for (std::size_t j = t; j < size; ++j) out.d_row.set(j - t, entry(k + t, j));
    if (gf2::rank(out.a) != t)
        throw RegularityViolation("submatrices: A_{k,t} singular at m=" + std::to_string(c.m) +
                                  " k=" + std::to_string(c.k) + " t=" + std::to_string(c.t));
    return out;
}

gf2::BitVec xi(int t) {
    if (t < 1) throw std::invalid_argument("xi: t must be positive");
    gf2::BitVec v(static_cast<std::size_t>(t));
    for (int j = 0; j < t; ++j) v.set(j, binom_parity(t, j));
    return v;
}

BitPair verify_sum_identity(std::int64_t t, std::int64_t k, std::int64_t l) {
    if (t < 0 || k < 0 || l < 0) throw std::domain_error("verify_sum_identity: negative input");
    int lhs = 0;
    for (std::int64_t j = 0; j <= t; ++j) lhs ^= binom_parity(t, j) & binom_parity(k + l + j, l);
    return BitPair{lhs, binom_parity(k + l, l - t)};
}

BitPair verify_corollary(std::int64_t t, std::int64_t k, std::int64_t l, CorItem item) {
    if (t < 1 || k < 0 || l < 0) throw std::domain_error("verify_corollary: bad input");
    if ((item == CorItem::a || item == CorItem::b) && l > t - 1)
        throw std::domain_error("verify_corollary: item requires 0 <= l <= t-1");
    std::int64_t top = item == CorItem::a ? t : t - 1;
    int lhs = 0;
    for (std::int64_t j = 0; j <= top; ++j) lhs ^= binom_parity(t, j) & binom_parity(k + l + j, l);
    int rhs = 0;
    switch (item) {
        case CorItem::a: rhs = 0; break;
        case CorItem::b: rhs = binom_parity(k + l + t, l); break;
        case CorItem::c: rhs = binom_parity(k + l + t, l) ^ binom_parity(k + l, l - t); break;
    }
    return BitPair{lhs, rhs};
}

BitPair verify_prefix_sum(std::int64_t i, std::int64_t u) {
    if (i < 0 || u < 0) throw std::domain_error("verify_prefix_sum: negative input");
    int lhs = 0;
    for (std::int64_t j = 1; j <= u; ++j) lhs ^= binom_parity(i + j, j);
    return BitPair{lhs, binom_parity(i + 1 + u, u) ^ 1};
}

namespace {

struct DmShape {
    std::uint64_t rows, cols, i_lo;
};

DmShape dm_shape(int m) {
    if (m <= 7) throw std::invalid_argument("d_matrix: requires m > 7");
    std::uint64_t cols = std::uint64_t{1} << (m - 7);
    std::uint64_t rows = 14 * cols;
    std::uint64_t i_lo = (std::uint64_t{1} << (m - 3)) - rows;
    return DmShape{rows, cols, i_lo};
}

inline int dm_entry(std::uint64_t i, std::uint64_t j) {
    return binom_parity(static_cast<std::int64_t>(i + 1 + j), static_cast<std::int64_t>(j)) ^ 1;
}

}  // namespace

gf2::Gf2Matrix d_matrix(int m) {
    DmShape s = dm_shape(m);
    if (m > 13) throw BudgetExceeded("d_matrix: materialized only for m <= 13");
    gf2::Gf2Matrix out(s.rows, s.cols);
    for (std::uint64_t r = 0; r < s.rows; ++r)
        for (std::uint64_t j = 0; j < s.cols; ++j)
            if (dm_entry(s.i_lo + r, j)) out.set(r, j, true);
    return out;
}

std::uint64_t d_ones_enumerated(int m) {
    DmShape s = dm_shape(m);
    if (m > 13) throw BudgetExceeded("d_ones_enumerated: m <= 13 only");
    std::uint64_t ones = 0;
    for (std::uint64_t r = 0; r < s.rows; ++r)
        for (std::uint64_t j = 0; j < s.cols; ++j) ones += dm_entry(s.i_lo + r, j);
    return ones;
}

std::uint64_t d_ones_column(int m, std::uint64_t col) {
    DmShape s = dm_shape(m);
    if (col >= s.cols) throw std::invalid_argument("d_ones_column: column out of range");
    std::uint64_t ones = 0;
    for (std::uint64_t r = 0; r < s.rows; ++r) ones += dm_entry(s.i_lo + r, col);
    return ones;
}

Rational d_ones_formula(int m) {
    if (m <= 7) throw std::invalid_argument("d_ones_formula: requires m > 7");
    int e = m - 7;
    BigUint pow3{1};
    for (int i = 0; i < e; ++i) pow3 *= BigUint{3};
    Rational side = Rational{1} - Rational{BigInt{pow3}, BigUint::pow2(2 * static_cast<std::size_t>(e))};
    Rational total = Rational{14} * Rational{BigInt{BigUint::pow2(static_cast<std::size_t>(e))}} *
                     Rational{BigInt{BigUint::pow2(static_cast<std::size_t>(e))}} * side;
    if (!total.is_integer())
        throw std::logic_error("d_ones_formula: non-integral count at m=" + std::to_string(m));
    return total;
}

gf2::BitVec SelectorVec::expand(std::size_t len) const {
    if (groups < 0 || offset < 0) throw SelectorOverflow("selector: negative shape");
    gf2::BitVec v(len);
    if (groups == 0) return v;
    std::size_t last_one = 8 * static_cast<std::size_t>(offset + groups - 1);
    if (last_one >= len)
        throw SelectorOverflow("selector: leading one of last group at " + std::to_string(last_one) +
                               " does not fit in length " + std::to_string(len));
    for (int g = 0; g < groups; ++g) v.set(8 * static_cast<std::size_t>(offset + g), true);
    return v;
}

BitPair verify_decimation(std::uint64_t i, const SelectorVec& sel) {
    int lhs = 0, rhs = 0;
    for (int g = 0; g < sel.groups; ++g) {
        std::uint64_t col = 8 * static_cast<std::uint64_t>(sel.offset + g);
        lhs ^= entry(i, col);
        rhs ^= entry(i >> 3, col / 8);
    }
    return BitPair{lhs, rhs};
}

RowIdentity verify_row_identity(const Coords& c) {
    std::size_t size = std::size_t{1} << c.m;
    if (static_cast<std::size_t>(c.k + c.t) + 1 > size)
        throw std::invalid_argument("verify_row_identity: requires k + t <= 2^m - 1");
    Blocks bl = submatrices(c);
    RowIdentity out{};
    out.c_matches = bl.c_row == gf2::vec_mat_mul(bl.xi, bl.a);
    gf2::BitVec tail(size - static_cast<std::size_t>(c.t));
    for (std::size_t s = 0; s < tail.len(); ++s)
        tail.set(s, entry(static_cast<std::size_t>(c.k + c.t), s));
    out.d_matches = bl.d_row == (gf2::vec_mat_mul(bl.xi, bl.b) ^ tail);
    return out;
}

gf2::BitVec prop1_kappa(const Coords& c) {
    std::int64_t size = std::int64_t{1} << c.m;
    if (c.k + c.t >= size) throw std::invalid_argument("prop1_kappa: requires k + t < 2^m");
    Blocks bl = submatrices(c);
    return gf2::vec_mat_mul(bl.c_row, gf2::invert(bl.a));
}

BitPair prop1_value(const Coords& c, int v) {
    std::int64_t size = std::int64_t{1} << c.m;
    if (c.k + c.t >= size) throw std::invalid_argument("prop1_value: requires k + t < 2^m");
    Blocks bl = submatrices(c);
    gf2::BitVec kappa = gf2::vec_mat_mul(bl.c_row, gf2::invert(bl.a));
    gf2::BitVec sel = SelectorVec{v}.expand(static_cast<std::size_t>(size - c.t));
    gf2::BitVec row = bl.d_row ^ gf2::vec_mat_mul(kappa, bl.b);
    int algebraic = row.dot(sel);
    int closed = binom_parity((c.k + c.t) / 8 + 1 + v, v) ^ 1;
    return BitPair{algebraic, closed};
}

}  // namespace levnum::pascal
