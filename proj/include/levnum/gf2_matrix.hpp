#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "levnum/bitvec.hpp"

namespace levnum::gf2 {

/// Dense matrix over GF(2), bit-packed row-major. All operations return
/// fresh values; nothing mutates a matrix after construction, so values can
/// be shared freely across threads.
class Gf2Matrix {
  public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(rows * wpr_, 0) {}
    Gf2Matrix(std::initializer_list<std::initializer_list<int>> rows);

    static Gf2Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return (bits_[r * wpr_ + c / 64] >> (c % 64)) & 1u; }
    void set(std::size_t r, std::size_t c, bool v);

    BitVec row(std::size_t r) const;
    std::uint64_t* row_words(std::size_t r) { return bits_.data() + r * wpr_; }
    const std::uint64_t* row_words(std::size_t r) const { return bits_.data() + r * wpr_; }
    std::size_t words_per_row() const { return wpr_; }

    bool operator==(const Gf2Matrix& o) const = default;

  private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Matrix-vector product; result bit i is <row i, v> mod 2.
BitVec mat_vec_mul(const Gf2Matrix& m, const BitVec& v);

/// Row-vector-matrix product v^T M; the XOR of the rows selected by v.
BitVec vec_mat_mul(const BitVec& v, const Gf2Matrix& m);

Gf2Matrix mat_mul(const Gf2Matrix& a, const Gf2Matrix& b);

/// Row rank over GF(2). The input is copied; elimination pivots on the first
/// row carrying a one in each column, columns left to right.
std::size_t rank(const Gf2Matrix& m);

/// Inverse of a regular square matrix; throws SingularMatrix otherwise.
Gf2Matrix invert(const Gf2Matrix& m);

/// Unique solution x of A x = b for regular square A; throws SingularMatrix.
BitVec solve(const Gf2Matrix& a, const BitVec& b);

}  // namespace levnum::gf2
