#include "levnum/gf2_matrix.hpp"

#include <stdexcept>
#include <utility>

#include "levnum/errors.hpp"
#include "levnum/kernels.hpp"

namespace levnum::gf2 {

Gf2Matrix::Gf2Matrix(std::initializer_list<std::initializer_list<int>> rows)
    : Gf2Matrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("Gf2Matrix: ragged initializer");
        std::size_t c = 0;
        for (int v : row) set(r, c++, v != 0);
        ++r;
    }
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (c % 64);
    if (v)
        bits_[r * wpr_ + c / 64] |= mask;
    else
        bits_[r * wpr_ + c / 64] &= ~mask;
}

BitVec Gf2Matrix::row(std::size_t r) const {
    BitVec v(cols_);
    for (std::size_t w = 0; w < wpr_; ++w) v.words()[w] = bits_[r * wpr_ + w];
    return v;
}

BitVec mat_vec_mul(const Gf2Matrix& m, const BitVec& v) {
    if (v.len() != m.cols()) throw std::invalid_argument("mat_vec_mul: dimension mismatch");
    BitVec out(m.rows());
    const auto& k = kern::active();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (k.and_popcount(m.row_words(r), v.words(), m.words_per_row()) & 1u) out.set(r, true);
    }
    return out;
}

BitVec vec_mat_mul(const BitVec& v, const Gf2Matrix& m) {
    if (v.len() != m.rows()) throw std::invalid_argument("vec_mat_mul: dimension mismatch");
    BitVec out(m.cols());
    const auto& k = kern::active();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (v.get(r)) k.xor_words(out.words(), m.row_words(r), m.words_per_row());
    }
    return out;
}

Gf2Matrix mat_mul(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    Gf2Matrix out(a.rows(), b.cols());
    const auto& k = kern::active();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t i = 0; i < a.cols(); ++i) {
            if (a.get(r, i)) k.xor_words(out.row_words(r), b.row_words(i), b.words_per_row());
        }
    }
    return out;
}

namespace {

// Forward elimination on `work`, mirroring every row operation onto `aug`
// when given. Pivot choice is deterministic: columns left to right, first
// row at or below the pivot row holding a one.
std::size_t eliminate(Gf2Matrix& work, Gf2Matrix* aug, bool reduce) {
    const auto& k = kern::active();
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < work.cols() && pivot_row < work.rows(); ++c) {
        std::size_t pr = pivot_row;
        while (pr < work.rows() && !work.get(pr, c)) ++pr;
        if (pr == work.rows()) continue;
        if (pr != pivot_row) {
            for (std::size_t w = 0; w < work.words_per_row(); ++w)
                std::swap(work.row_words(pr)[w], work.row_words(pivot_row)[w]);
            if (aug)
                for (std::size_t w = 0; w < aug->words_per_row(); ++w)
                    std::swap(aug->row_words(pr)[w], aug->row_words(pivot_row)[w]);
        }
        std::size_t first = reduce ? 0 : pivot_row + 1;
        for (std::size_t r = first; r < work.rows(); ++r) {
            if (r == pivot_row || !work.get(r, c)) continue;
            k.xor_words(work.row_words(r), work.row_words(pivot_row), work.words_per_row());
            if (aug) k.xor_words(aug->row_words(r), aug->row_words(pivot_row), aug->words_per_row());
        }
        ++pivot_row;
    }
    return pivot_row;
}

}  // namespace

std::size_t rank(const Gf2Matrix& m) {
    Gf2Matrix work = m;
    return eliminate(work, nullptr, false);
}

Gf2Matrix invert(const Gf2Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("invert: matrix not square");
    Gf2Matrix work = m;
    Gf2Matrix aug = Gf2Matrix::identity(m.rows());
    std::size_t rk = eliminate(work, &aug, true);
    if (rk < m.rows()) throw SingularMatrix("invert: rank " + std::to_string(rk) + " < " + std::to_string(m.rows()));
    return aug;
}

BitVec solve(const Gf2Matrix& a, const BitVec& b) {
    if (a.rows() != a.cols()) throw std::invalid_argument("solve: matrix not square");
    if (b.len() != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
    Gf2Matrix work = a;
    Gf2Matrix rhs(a.rows(), 1);
    for (std::size_t i = 0; i < b.len(); ++i) rhs.set(i, 0, b.get(i));
    std::size_t rk = eliminate(work, &rhs, true);
    if (rk < a.rows()) throw SingularMatrix("solve: singular system");
    // work is now the identity; rhs holds the solution
    BitVec x(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) x.set(i, rhs.get(i, 0));
    return x;
}

}  // namespace levnum::gf2
