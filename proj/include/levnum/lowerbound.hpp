#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "levnum/bigint.hpp"
#include "levnum/bitvec.hpp"
#include "levnum/discrepancy.hpp"
#include "levnum/levin_number.hpp"
#include "levnum/rational.hpp"

// The adversarial interval construction: a descending chain of widths w_l,
// one n-block per level, a scan for the intervals that miss the exact
// per-interval point count, a clean window Z, the gamma decision system per
// (level, offset), and the assembly of the interval chain whose point count
// overshoots its length share. Enumerative verification runs at reduced
// scale; at the construction's native scale only the closed-form arithmetic
// is executed.

namespace levnum::lb {

struct Params {
    int m = 0;                       // digit block index; points live in block m
    int top_level = 0;               // M; levels are l = 0..M
    std::uint32_t step = 8;          // width decrement, multiple of 8
    std::vector<std::uint32_t> w;    // w[l] = w_0 - step*l, strictly decreasing, odd
    bool native_widths = false;       // built by default_params

    std::uint64_t points_at_level(int l) const;  // 2^m * 2^{w_l}
    BigUint n_total() const;                     // n_m + 2^m * sum_l 2^{w_l}
};

/// Block offset B_l = 2^{w_0} + ... + 2^{w_{l-1}} (B_0 = 0); computed on
/// demand, the native-scale offsets are megabit numbers.
BigUint b_offset(const Params& p, int l);

/// Native widths: w_l = 2^(m-3) - 1 - 8l for l = 0..2^(m-7)-1 (m = 7 gives
/// the single level l = 0). Verifies oddness, ordering and 2^(m-4) < w_M.
Params default_params(int m);

/// Desk-scale analogue with chosen M, w_0 and step; the step stays a
/// multiple of 8 so the selector machinery keeps its 8-group alignment.
Params reduced_params(int m, int top_level, std::uint32_t w0, std::uint32_t step);

struct ExceptionalScan {
    std::vector<std::vector<std::uint64_t>> exceptional;  // per level: c with N(c) != 2^m
    std::vector<std::uint64_t> histogram_totals;          // per level: number of points scanned
    disc::DyadicInterval z;                               // clean window, resolution 2m+1
    Rational measure_bound;                               // sum of exceptional interval lengths
};

/// Per level, the interval counts at resolution w_l over the level's
/// n-block, and the longest window at resolution 2m+1 (leftmost among ties)
/// disjoint from every exceptional interval. Throws NoWindowFound if every
/// window is blocked, BudgetExceeded if the enumeration is too large.
ExceptionalScan exceptional_scan(const levin::Digits& d, const Params& p,
                                 std::uint64_t budget_points = std::uint64_t{1} << 26);

/// The selector term of the gamma system: the inner product of row k+w_l
/// (columns w_l..2^m-1) with the selector induced by the level's block
/// offset bits. Computed by the decimated closed form; for step 8 the
/// single-binomial form C(floor((k+w)/8)+1+l, l)+1 is asserted against it.
int sv_bit(int l, std::uint32_t k, const Params& p);

/// Full gamma bit for offset k at level l with window bits u (most
/// significant first). Computed both through the GF(2) solve and through
/// the xi/selector closed form; agreement is asserted. `bump` flips the
/// last u bit (the neighbouring-interval variant).
int gamma_bit(int l, std::uint32_t k, const Params& p, const gf2::BitVec& u_bits, bool bump = false);

struct ACounts {
    std::uint64_t sv_zero = 0;  // offsets k with selector term 0
    std::uint64_t sv_one = 0;   // offsets k with selector term 1
    std::uint64_t a_max = 0;    // max of the two
    Rational q;                 // a_max / 2^m
};

/// Counts of the selector term over all k with k + w_l < 2^m. The gamma
/// values per k are a constant XOR of the selector term, so a_max is the
/// majority count A(l) regardless of the window bits.
ACounts a_counts(int l, const Params& p);

/// Every z in [2^(m-3) - 14*2^(m-7), 2^(m-3)) is hit by floor((k+w_l)/8)
/// for exactly 8 offsets k in [0, 2^m), and the two boundary inequalities
/// hold. Native widths only.
bool attained_z_check(int l, const Params& p);

struct Level {
    std::uint32_t w = 0;        // width at this level
    std::uint64_t u = 0;        // U(l)
    std::uint64_t v2 = 0;       // 2*V(l); V - U is 1/2 or 3/2
    int gamma = 0;              // chosen branch
    std::uint64_t a0 = 0;       // offsets with gamma = 0
    std::uint64_t a1 = 0;       // offsets with gamma = 1
    Rational q;                 // max(a0, a1) / 2^m
};

struct Chain {
    std::vector<Level> levels;  // index l = 0..M (built from M downwards)
    disc::DyadicInterval z;
    Rational lambda_j;          // total length of the interval union
};

/// Builds the chain from the clean window: U(M) is the least even integer
/// with U(M)/2^{w_M} in Z, each level keeps the half or three-half interval
/// of its majority gamma, and boundaries rescale evenly level to level.
Chain build_chain(const Params& p, const ExceptionalScan& scan);

struct BlockCheck {
    std::uint64_t count = 0;  // points of level l in J_M u ... u J_l
    Rational bound;           // 2^m 2^{w_l} lambda(union) + (q(l)-1/2) 2^m
    Rational surplus;         // count - bound
};

/// Enumerates the level-l block against the union of intervals at levels
/// M..l and compares with the guaranteed lower bound.
BlockCheck verify_block_inequality(const levin::Digits& d, int l, const Chain& chain, const Params& p);

struct SurplusBound {
    bool enumerated_available = false;
    std::uint64_t enumerated_sum = 0;  // sum over l of A(l)
    Rational ones_bound;               // 8 * ones(D_m), exact
    Rational closing_bound;            // 2^{2m} * 7 * 31 / 2^15
    bool enum_ge_ones = false;
    bool ones_ge_closing = false;
    bool proviso_met = false;          // 1 - (3/4)^{m-7} >= 31/32
};

/// Three-way comparison of the per-level majority counts against the
/// D_m ones count and the closing constant. Native widths only.
SurplusBound total_surplus_bound(const Params& p);

enum class TermKind { enumerated, closed_form, assumed };

struct Term {
    std::string name;
    Rational value;
    TermKind kind = TermKind::closed_form;
};

struct Report {
    Params params;
    BigUint n_total;
    bool enumerated = false;
    bool has_chain = false;
    std::vector<std::uint64_t> exceptional_counts;
    Rational exceptional_measure_bound;
    disc::DyadicInterval z;
    std::vector<Level> levels;
    Rational lambda_j;
    std::vector<BlockCheck> block_checks;  // per level, enumerated runs only
    std::vector<Term> terms;               // additive ledger of the closing estimate
    Rational surplus;                      // exact (enumerated) or lower bound (closed form)
    bool log_check = false;                // N < 2^(2^(m+2)), so (log N)^2 <= 16*2^(2m)
    Rational implied_c;                    // surplus / (16 * 2^(2m)) when positive
    double log2_n = 0;
};

/// Lemma-1 style prefix budget: 10 * (2^m - 2).
Rational default_prefix_budget(int m);

/// Assembles the closing-estimate ledger. With digits and a chain the
/// count-minus-share terms are enumerated exactly; without them the ledger
/// uses the closed-form bounds and the given prefix budget.
Report final_accounting(const Params& p, const Chain* chain, const levin::Digits* d,
                        const Rational& prefix_epsilon_budget);

/// scan + chain + per-level checks + enumerated accounting in one call.
Report run_construction(const levin::Digits& d, const Params& p,
                        std::uint64_t budget_points = std::uint64_t{1} << 26);

std::string report_to_text(const Report& r);
std::string report_to_json(const Report& r);

}  // namespace levnum::lb
