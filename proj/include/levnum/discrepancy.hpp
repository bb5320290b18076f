#pragma once

#include <cstdint>
#include <iosfwd>
#include <variant>
#include <vector>

#include "levnum/bigint.hpp"
#include "levnum/levin_number.hpp"
#include "levnum/rational.hpp"

// Exact counting and exact discrepancy of finite dyadic point sets, plus the
// counting verifiers and the elementary witness construction over the orbit
// prefix. Every returned quantity is an exact rational; floating point only
// appears in reporting columns.

namespace levnum::disc {

/// Half-open dyadic interval [lo/2^res, hi/2^res).
struct DyadicInterval {
    BigUint lo;
    BigUint hi;
    unsigned resolution = 0;
};

/// Exact membership count. Requires the interval resolution not to exceed
/// the point precision: truncation error is then below the endpoint grid and
/// the truncated points decide membership exactly.
std::uint64_t count_in(const levin::PointSet& ps, const DyadicInterval& j);
/// Same, restricted to the first `first_n` points.
std::uint64_t count_in(const levin::PointSet& ps, const DyadicInterval& j, std::uint64_t first_n);

/// Anchored discrepancy sup_b |#[0,b)/N - b|.
Rational star_discrepancy(const levin::PointSet& ps);

/// Two-sided discrepancy sup_{a<b} |#[a,b)/N - (b-a)|, exact over all real
/// intervals (one-sided limits at the points and at b = 1 are folded in).
Rational extreme_discrepancy(const levin::PointSet& ps);

/// Independent oracle: maximum over all candidate intervals with endpoints
/// on the 2^-q grid or just above it. Lower-bounds extreme_discrepancy and
/// equals it at q = precision.
Rational brute_force_discrepancy(const levin::PointSet& ps, unsigned q);

/// Histogram of the q-bit digit windows of the orbit points of block m:
/// index v counts positions n in the block with floor({2^n alpha} * 2^q) = v.
/// Enumerates the whole block; refuses m >= 5 unless allow_large is set.
std::vector<std::uint64_t> orbit_window_histogram(const levin::Digits& d, int m, unsigned q,
                                                  bool allow_large = false);

struct Lemma1Result {
    BigUint count;     // points of block m in [0, gamma)
    Rational epsilon;  // (count - gamma * block_size) / 2^m
};

/// Block-m count of {2^n alpha} in [0, gamma), gamma = num/2^den_exp, and
/// the normalized deviation epsilon (the counting lemma asserts |eps| < 5).
Lemma1Result verify_lemma1(const levin::Digits& d, int m, std::uint64_t gamma_num,
                           unsigned gamma_den_exp, bool allow_large = false);
Lemma1Result lemma1_from_histogram(const std::vector<std::uint64_t>& hist, int m,
                                   std::uint64_t gamma_num, unsigned gamma_den_exp);

/// Exact per-interval counts N(c) for c in [0, 2^i): points x_{n,k} with
/// k < 2^m and B*2^i <= n < (B+1)*2^i, interval [c/2^i, (c+1)/2^i). All but
/// at most 2^(m+1) of the counts equal 2^m.
std::vector<std::uint64_t> verify_lemma2(const levin::Digits& d, int m, unsigned i, std::uint64_t B,
                                         bool allow_large = false);

struct GrowthRow {
    std::uint64_t n = 0;
    Rational n_times_d;    // N * D_N exact
    double log2n_sq = 0;   // (log2 N)^2
    double ratio = 0;      // N*D_N / (log2 N)^2
    bool ratio_defined = false;
    unsigned precision = 0;    // truncation precision used
    Rational enclosure_width;  // |D_N(true) - D_N(truncated)| bound, 2*2^-P
};

/// Exact N*D_N over the orbit prefix for each requested N, with truncation
/// precision P(N) = ceil(log2 N) + 4.
std::vector<GrowthRow> growth_table(const levin::Digits& d, const std::vector<std::uint64_t>& ns);

/// CSV: header N,ND_N_num,ND_N_den,log2N_sq,ratio
void write_growth_csv(std::ostream& os, const std::vector<GrowthRow>& rows);

struct Witness {
    std::uint64_t n = 0;    // prefix length certifying the defect
    DyadicInterval j;       // [0,1/2) or [0,2^-L)
    Rational defect;        // |count - n*lambda(J)| >= L/4
};

struct AssumptionViolated {
    std::uint64_t n = 0;
    Rational n_times_d;     // exact N*D_N
    double log_n = 0;       // natural log, the violated budget
};

using SchmidtOutcome = std::variant<Witness, AssumptionViolated>;

/// The elementary lower-bound argument run constructively on a concrete
/// prefix: either a certified counting defect of size L/4, or a concrete N
/// where N*D_N already exceeds log N. `prefix` must hold at least M + L
/// points, L = floor(log2(M)/2).
SchmidtOutcome schmidt_witness(const levin::PointSet& prefix, std::uint64_t m_len);

}  // namespace levnum::disc
