#include "levnum/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "levnum/errors.hpp"

namespace levnum::disc {

namespace {
using u64 = std::uint64_t;

void validate_interval(const DyadicInterval& j) {
    if (!(j.lo < j.hi) || j.hi > BigUint::pow2(j.resolution))
        throw std::invalid_argument("DyadicInterval: requires 0 <= lo < hi <= 2^resolution");
}

}  // namespace

u64 count_in(const levin::PointSet& ps, const DyadicInterval& j, u64 first_n) {
    validate_interval(j);
    if (j.resolution > ps.precision)
        throw ResolutionExceedsPrecision("count_in: interval resolution " + std::to_string(j.resolution) +
                                         " exceeds point precision " + std::to_string(ps.precision));
    std::size_t shift = ps.precision - j.resolution;
    BigUint lo = j.lo << shift;
    BigUint hi = j.hi << shift;
    u64 count = 0;
    u64 limit = std::min<u64>(first_n, ps.nums.size());
    for (u64 i = 0; i < limit; ++i) {
        if (ps.nums[i] >= lo && ps.nums[i] < hi) ++count;
    }
    return count;
}

u64 count_in(const levin::PointSet& ps, const DyadicInterval& j) {
    return count_in(ps, j, ps.nums.size());
}

namespace {

struct FExtrema {
    BigInt max_up;    // max over k of C(k)*2^P - v_k*N, floored at 0
    BigInt min_down;  // min over k of C(k-1)*2^P - v_k*N, capped at 0
};

// Extrema of the scaled deviation function F(x) = #[0,x)/N - x over the
// closure of its one-sided limits; scaled by N*2^P.
FExtrema f_extrema(const levin::PointSet& ps) {
    if (ps.nums.empty()) throw std::invalid_argument("discrepancy: empty point set");
    std::vector<BigUint> sorted = ps.nums;
    std::sort(sorted.begin(), sorted.end());
    BigUint n{static_cast<u64>(sorted.size())};
    FExtrema ext{BigInt{0}, BigInt{0}};
    std::size_t idx = 0;
    while (idx < sorted.size()) {
        std::size_t next = idx;
        while (next < sorted.size() && sorted[next] == sorted[idx]) ++next;
        const BigUint& v = sorted[idx];
        BigInt vn{v * n};
        // right limit at v: all points up to and including v counted
        BigInt up = BigInt{BigUint{static_cast<u64>(next)} << ps.precision} - vn;
        // left value at v: points strictly below v counted
        BigInt down = BigInt{BigUint{static_cast<u64>(idx)} << ps.precision} - vn;
        if (up > ext.max_up) ext.max_up = std::move(up);
        if (down < ext.min_down) ext.min_down = std::move(down);
        idx = next;
    }
    return ext;
}

}  // namespace

Rational star_discrepancy(const levin::PointSet& ps) {
    FExtrema ext = f_extrema(ps);
    BigInt best = ext.max_up > -ext.min_down ? ext.max_up : -ext.min_down;
    return Rational{best, BigUint{static_cast<u64>(ps.nums.size())} << ps.precision};
}

Rational extreme_discrepancy(const levin::PointSet& ps) {
    FExtrema ext = f_extrema(ps);
    return Rational{ext.max_up - ext.min_down, BigUint{static_cast<u64>(ps.nums.size())} << ps.precision};
}

Rational brute_force_discrepancy(const levin::PointSet& ps, unsigned q) {
    if (ps.nums.empty()) throw std::invalid_argument("discrepancy: empty point set");
    if (q > ps.precision)
        throw ResolutionExceedsPrecision("brute_force_discrepancy: q exceeds point precision");
    if (q > 26) throw BudgetExceeded("brute_force_discrepancy: grid 2^q too large");
    std::size_t cells = std::size_t{1} << q;
    std::size_t shift = ps.precision - q;
    std::vector<u64> below(cells + 1, 0);    // below[a]: points with value < a/2^q
    std::vector<u64> at(cells + 1, 0);       // at[a]: points exactly at a/2^q
    for (const BigUint& v : ps.nums) {
        u64 cell = (v >> shift).to_u64();
        below[cell + 1] += 1;
        if ((BigUint{cell} << shift) == v) at[cell] += 1;
    }
    for (std::size_t a = 1; a <= cells; ++a) below[a] += below[a - 1];

    u64 n = ps.nums.size();
    // part(a, plain) counts points below a/2^q; part(a, plus) counts points
    // at or below it (endpoint "just above" the grid value)
    auto part = [&](std::size_t a, bool plus) { return below[a] + (plus ? at[a] : 0); };
    BigUint best;  // max of |count*2^q - (b-a)*N| over candidates
    auto consider = [&](std::size_t a, bool ap, std::size_t b, bool bp) {
        if (b < a || (b == a && (ap || !bp))) return;  // empty real interval
        if (bp && b == cells) return;                  // nothing beyond 1
        u64 count = part(b, bp) - part(a, ap);
        u64 scaled_count = count << q;
        u64 scaled_len = (static_cast<u64>(b - a)) * n;
        u64 diff = scaled_count > scaled_len ? scaled_count - scaled_len : scaled_len - scaled_count;
        if (BigUint{diff} > best) best = BigUint{diff};
    };
    for (std::size_t a = 0; a <= cells; ++a) {
        for (std::size_t b = a; b <= cells; ++b) {
            consider(a, false, b, false);
            consider(a, false, b, true);
            consider(a, true, b, false);
            consider(a, true, b, true);
        }
    }
    return Rational{BigInt{best}, BigUint{n} << q};
}

std::vector<u64> orbit_window_histogram(const levin::Digits& d, int m, unsigned q, bool allow_large) {
    if (m < 1) throw std::invalid_argument("orbit_window_histogram: bad block");
    if (q < 1 || q > 26) throw std::invalid_argument("orbit_window_histogram: q out of range");
    if (m >= 5 && !allow_large)
        throw BudgetExceeded("orbit_window_histogram: block " + std::to_string(m) +
                             " needs the long-run flag");
    u64 windows = (u64{1} << m) << (u64{1} << m);  // block digit count
    std::vector<u64> hist(std::size_t{1} << q, 0);
    levin::Digits::Stream s = d.stream_at(levin::block_start(m) + BigUint{1});
    u64 mask = (u64{1} << q) - 1;
    u64 v = 0;
    for (unsigned j = 0; j + 1 < q; ++j) v = (v << 1) | static_cast<u64>(s.next());
    for (u64 i = 0; i < windows; ++i) {
        v = ((v << 1) | static_cast<u64>(s.next())) & mask;
        ++hist[v];
    }
    return hist;
}

Lemma1Result lemma1_from_histogram(const std::vector<u64>& hist, int m, u64 gamma_num,
                                   unsigned gamma_den_exp) {
    if (hist.size() != (std::size_t{1} << gamma_den_exp))
        throw std::invalid_argument("lemma1_from_histogram: histogram resolution mismatch");
    if (gamma_num >= (u64{1} << gamma_den_exp))
        throw std::invalid_argument("lemma1_from_histogram: gamma must lie in [0, 1)");
    u64 count = 0;
    for (u64 v = 0; v < gamma_num; ++v) count += hist[v];
    BigUint block = levin::block_digit_count(m);
    Rational gamma = Rational::dyadic(BigInt{static_cast<std::int64_t>(gamma_num)}, gamma_den_exp);
    Rational eps = (Rational{BigInt{BigUint{count}}} - gamma * Rational{BigInt{block}}) *
                   Rational::dyadic(BigInt{1}, static_cast<std::size_t>(m));
    return Lemma1Result{BigUint{count}, eps};
}

Lemma1Result verify_lemma1(const levin::Digits& d, int m, u64 gamma_num, unsigned gamma_den_exp,
                           bool allow_large) {
    if (gamma_num == 0) {
        return Lemma1Result{BigUint{}, Rational{0}};
    }
    auto hist = orbit_window_histogram(d, m, gamma_den_exp, allow_large);
    return lemma1_from_histogram(hist, m, gamma_num, gamma_den_exp);
}

std::vector<u64> verify_lemma2(const levin::Digits& d, int m, unsigned i, u64 B, bool allow_large) {
    if (m < 1) throw std::invalid_argument("verify_lemma2: bad block");
    if (i >= (1u << m)) throw std::invalid_argument("verify_lemma2: requires 0 <= i < 2^m");
    if (m >= 5 && !allow_large)
        throw BudgetExceeded("verify_lemma2: block " + std::to_string(m) + " needs the long-run flag");
    if (m < 6) {
        u64 n_total = u64{1} << (u64{1} << m);
        if ((B >> ((u64{1} << m) - i)) != 0 || B * (u64{1} << i) >= n_total)
            throw std::invalid_argument("verify_lemma2: B out of range");
    }
    if (i > 26) throw BudgetExceeded("verify_lemma2: resolution 2^i too large");
    std::vector<u64> counts(std::size_t{1} << i, 0);
    u64 windows = u64{1} << (static_cast<unsigned>(m) + i);
    // window start offsets within the block are consecutive: 2^m*(B*2^i) + s
    BigUint first = levin::block_start(m) + (BigUint{B} << (static_cast<std::size_t>(m) + i)) + BigUint{1};
    levin::Digits::Stream s = d.stream_at(first);
    if (i == 0) {
        counts[0] = windows;
        return counts;
    }
    u64 mask = (u64{1} << i) - 1;
    u64 v = 0;
    for (unsigned j = 0; j + 1 < i; ++j) v = (v << 1) | static_cast<u64>(s.next());
    for (u64 w = 0; w < windows; ++w) {
        v = ((v << 1) | static_cast<u64>(s.next())) & mask;
        ++counts[v];
    }
    return counts;
}

std::vector<GrowthRow> growth_table(const levin::Digits& d, const std::vector<u64>& ns) {
    std::vector<GrowthRow> rows;
    rows.reserve(ns.size());
    for (std::size_t i = 1; i < ns.size(); ++i)
        if (ns[i] <= ns[i - 1]) throw std::invalid_argument("growth_table: N must be strictly increasing");
    for (u64 n : ns) {
        if (n == 0) throw std::invalid_argument("growth_table: N must be positive");
        unsigned p = 4;
        while ((u64{1} << (p - 4)) < n) ++p;  // P = ceil(log2 N) + 4
        levin::PointSet ps;
        ps.precision = p;
        ps.nums.reserve(n);
        ps.origin = levin::Origin{BigUint{0}, n};
        levin::Digits::Stream s = d.stream_at(BigUint{1});
        // first window primed fully, then slide one digit at a time
        BigUint win;
        std::vector<int> ring(p, 0);
        for (unsigned j = 0; j < p; ++j) {
            int bit = s.next();
            ring[j] = bit;
            if (bit) win.set_bit(p - 1 - j);
        }
        std::size_t head = 0;
        for (u64 idx = 0;;) {
            ps.nums.push_back(win);
            if (++idx == n) break;
            int incoming = s.next();
            // drop the leading digit, shift, append
            if (ring[head]) win -= BigUint::pow2(p - 1);
            win <<= 1;
            if (incoming) win.set_bit(0);
            ring[head] = incoming;
            head = (head + 1) % p;
        }
        GrowthRow row;
        row.n = n;
        row.precision = p;
        row.n_times_d = extreme_discrepancy(ps) * Rational{BigInt{static_cast<std::int64_t>(n)}};
        row.enclosure_width = Rational::dyadic(BigInt{1}, p - 1);
        double log2n = std::log2(static_cast<double>(n));
        row.log2n_sq = log2n * log2n;
        row.ratio_defined = n >= 2;
        row.ratio = row.ratio_defined ? row.n_times_d.to_double() / row.log2n_sq : 0.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_growth_csv(std::ostream& os, const std::vector<GrowthRow>& rows) {
    os << "N,ND_N_num,ND_N_den,log2N_sq,ratio\n";
    char buf[64];
    for (const auto& r : rows) {
        os << r.n << ',' << r.n_times_d.num().to_decimal() << ',' << r.n_times_d.den().to_decimal() << ',';
        std::snprintf(buf, sizeof buf, "%.17g", r.log2n_sq);
        os << buf << ',';
        if (r.ratio_defined) {
            std::snprintf(buf, sizeof buf, "%.17g", r.ratio);
            os << buf;
        } else {
            os << "nan";
        }
        os << '\n';
    }
}

SchmidtOutcome schmidt_witness(const levin::PointSet& prefix, u64 m_len) {
    if (m_len < 4) throw std::invalid_argument("schmidt_witness: M too small");
    unsigned l = (static_cast<unsigned>(BigUint{m_len}.bit_length()) - 1) / 2;
    u64 u_len = m_len + l;
    if (prefix.nums.size() < u_len)
        throw std::invalid_argument("schmidt_witness: prefix shorter than M + L");
    if (prefix.precision < l || prefix.precision < 1)
        throw ResolutionExceedsPrecision("schmidt_witness: precision below 2^-L resolution");
    if (static_cast<double>(m_len) / std::pow(2.0, l) <= std::log(static_cast<double>(m_len)))
        throw std::invalid_argument("schmidt_witness: M/2^L - log M must be positive");

    const Rational quarter_l = Rational{BigInt{static_cast<std::int64_t>(l)}} * Rational{BigInt{1}, BigUint{4}};
    DyadicInterval deep{BigUint{0}, BigUint{1}, l};     // [0, 2^-L)
    DyadicInterval half{BigUint{0}, BigUint{1}, 1};     // [0, 1/2)

    u64 c_deep = count_in(prefix, deep, m_len);
    if (c_deep == 0) {
        Rational defect = Rational{BigInt{static_cast<std::int64_t>(m_len)}, BigUint::pow2(l)};
        if (defect >= quarter_l) return Witness{m_len, deep, defect};
    } else {
        // least index with x_idx in [0, 2^-L)
        BigUint bound = BigUint::pow2(prefix.precision - l);
        u64 idx = 0;
        while (prefix.nums[idx] >= bound) ++idx;
        u64 c1 = count_in(prefix, half, idx);
        u64 c2 = count_in(prefix, half, idx + l);
        Rational half_idx{BigInt{BigUint{idx}}, BigUint{2}};
        Rational half_idx_l{BigInt{BigUint{idx + l}}, BigUint{2}};
        if (Rational{BigInt{BigUint{c1}}} <= half_idx - quarter_l)
            return Witness{idx, half, half_idx - Rational{BigInt{BigUint{c1}}}};
        if (Rational{BigInt{BigUint{c2}}} >= half_idx_l + quarter_l)
            return Witness{idx + l, half, Rational{BigInt{BigUint{c2}}} - half_idx_l};
    }

    // The pigeonhole dichotomy can only fail for sequences without the shift
    // dynamics; certify a concrete index where N*D_N already exceeds log N.
    u64 scan_cap = std::min<u64>(u_len, 4096);
    for (u64 n = 2; n <= scan_cap; ++n) {
        levin::PointSet head;
        head.precision = prefix.precision;
        head.nums.assign(prefix.nums.begin(), prefix.nums.begin() + static_cast<std::ptrdiff_t>(n));
        Rational nd = extreme_discrepancy(head) * Rational{BigInt{BigUint{n}}};
        double logn = std::log(static_cast<double>(n));
        if (nd.to_double() > logn + 1e-9) return AssumptionViolated{n, nd, logn};
    }
    throw std::logic_error("schmidt_witness: no certified outcome within the scan cap");
}

}  // namespace levnum::disc
