#include "levnum/lowerbound.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "levnum/errors.hpp"
#include "levnum/gf2_matrix.hpp"
#include "levnum/pascal.hpp"

namespace levnum::lb {

namespace {
using u64 = std::uint64_t;
using u128 = unsigned __int128;

void validate_common(const Params& p) {
    if (p.top_level < 0) throw std::invalid_argument("params: negative level count");
    if (p.step % 8 != 0 || p.step == 0) throw std::invalid_argument("params: step must be a multiple of 8");
    u64 size = u64{1} << p.m;
    for (int l = 0; l <= p.top_level; ++l) {
        u64 w = p.w[static_cast<std::size_t>(l)];
        if (w % 2 == 0 || w == 0) throw std::invalid_argument("params: widths must be odd");
        if (w >= size) throw std::invalid_argument("params: width reaches 2^m");
        if (l > 0 && w + p.step != p.w[static_cast<std::size_t>(l) - 1])
            throw std::invalid_argument("params: widths must descend by the step");
    }
}

}  // namespace

u64 Params::points_at_level(int l) const {
    u64 w = this->w.at(static_cast<std::size_t>(l));
    if (static_cast<u64>(m) + w > 62) throw BudgetExceeded("level point count exceeds 2^62");
    return u64{1} << (static_cast<u64>(m) + w);
}

BigUint Params::n_total() const {
    BigUint total = levin::block_start(m);
    for (int l = 0; l <= top_level; ++l)
        total += BigUint::pow2(static_cast<std::size_t>(m) + w[static_cast<std::size_t>(l)]);
    return total;
}

BigUint b_offset(const Params& p, int l) {
    BigUint b;
    for (int r = 0; r < l; ++r) b += BigUint::pow2(p.w[static_cast<std::size_t>(r)]);
    return b;
}

Params default_params(int m) {
    if (m < 7 || m > 24) throw std::invalid_argument("default_params: m must be in [7, 24]");
    Params p;
    p.m = m;
    p.top_level = (1 << (m - 7)) - 1;
    p.step = 8;
    p.native_widths = true;
    for (int l = 0; l <= p.top_level; ++l)
        p.w.push_back((std::uint32_t{1} << (m - 3)) - 1 - 8 * static_cast<std::uint32_t>(l));
    validate_common(p);
    if (!(p.w.back() > (std::uint32_t{1} << (m - 4))))
        throw std::logic_error("default_params: w_M must exceed 2^(m-4)");
    return p;
}

Params reduced_params(int m, int top_level, std::uint32_t w0, std::uint32_t step) {
    if (m < 1 || m > 12) throw std::invalid_argument("reduced_params: m out of range");
    Params p;
    p.m = m;
    p.top_level = top_level;
    p.step = step;
    p.native_widths = false;
    for (int l = 0; l <= top_level; ++l) {
        std::int64_t w = static_cast<std::int64_t>(w0) - static_cast<std::int64_t>(step) * l;
        if (w <= 0) throw std::invalid_argument("reduced_params: widths must stay positive");
        p.w.push_back(static_cast<std::uint32_t>(w));
    }
    validate_common(p);
    if (m < 6) {
        BigUint n_range = b_offset(p, top_level) + BigUint::pow2(p.w.back());
        if (n_range > BigUint::pow2(std::size_t{1} << m))
            throw std::invalid_argument("reduced_params: n range exceeds the block");
    }
    return p;
}

namespace {

// q-bit digit windows of the orbit points starting at 1-based position
// first_pos1, one window per consecutive start. Calls sink(value) per window.
template <typename Sink>
void scan_windows(const levin::Digits& d, const BigUint& first_pos1, u64 windows, unsigned q, Sink&& sink) {
    levin::Digits::Stream s = d.stream_at(first_pos1);
    u64 mask = q >= 64 ? ~u64{0} : (u64{1} << q) - 1;
    u64 v = 0;
    for (unsigned j = 0; j + 1 < q; ++j) v = (v << 1) | static_cast<u64>(s.next());
    for (u64 i = 0; i < windows; ++i) {
        v = ((v << 1) | static_cast<u64>(s.next())) & mask;
        sink(v);
    }
}

BigUint level_first_pos(const Params& p, int l) {
    return levin::block_start(p.m) + (b_offset(p, l) << static_cast<std::size_t>(p.m)) + BigUint{1};
}

}  // namespace

ExceptionalScan exceptional_scan(const levin::Digits& d, const Params& p, u64 budget_points) {
    u64 total_points = 0;
    for (int l = 0; l <= p.top_level; ++l) {
        if (static_cast<u64>(p.m) + p.w[static_cast<std::size_t>(l)] > 50)
            throw BudgetExceeded("exceptional_scan: level enumeration out of reach");
        total_points += p.points_at_level(l);
    }
    if (total_points > budget_points)
        throw BudgetExceeded("exceptional_scan: " + std::to_string(total_points) + " points exceed budget " +
                             std::to_string(budget_points));

    ExceptionalScan out;
    out.measure_bound = Rational{0};
    u64 expected = u64{1} << p.m;
    for (int l = 0; l <= p.top_level; ++l) {
        unsigned w = p.w[static_cast<std::size_t>(l)];
        std::vector<u64> hist(std::size_t{1} << w, 0);
        scan_windows(d, level_first_pos(p, l), p.points_at_level(l), w, [&](u64 v) { ++hist[v]; });
        std::vector<u64> exc;
        for (u64 c = 0; c < hist.size(); ++c)
            if (hist[c] != expected) exc.push_back(c);
        out.measure_bound += Rational{BigInt{BigUint{static_cast<u64>(exc.size())}}, BigUint::pow2(w)};
        out.exceptional.push_back(std::move(exc));
        out.histogram_totals.push_back(p.points_at_level(l));
    }

    unsigned res = 2 * static_cast<unsigned>(p.m) + 1;
    std::vector<char> blocked(std::size_t{1} << res, 0);
    for (int l = 0; l <= p.top_level; ++l) {
        unsigned w = p.w[static_cast<std::size_t>(l)];
        for (u64 c : out.exceptional[static_cast<std::size_t>(l)]) {
            u64 zlo, zhi;
            if (w >= res) {
                zlo = c >> (w - res);
                zhi = ((c + 1) + (u64{1} << (w - res)) - 1) >> (w - res);
            } else {
                zlo = c << (res - w);
                zhi = (c + 1) << (res - w);
            }
            for (u64 z = zlo; z < zhi && z < blocked.size(); ++z) blocked[z] = 1;
        }
    }
    // maximal clean runs; prefer the leftmost one that can host the whole
    // chain (an even anchor plus the a-priori length bound of the interval
    // union), otherwise fall back to the longest run, leftmost among ties
    Rational lambda_max{0};
    for (int l = 0; l <= p.top_level; ++l)
        lambda_max += Rational{BigInt{3}, BigUint::pow2(p.w[static_cast<std::size_t>(l)] + 1)};
    unsigned w_top = p.w.back();
    auto hosts_chain = [&](u64 run_start, u64 run_len) {
        // least even u with u/2^{w_M} >= run_start/2^res
        u64 u;
        if (w_top >= res) {
            u = run_start << (w_top - res);
        } else {
            u = (run_start + (u64{1} << (res - w_top)) - 1) >> (res - w_top);
        }
        if (u % 2 != 0) ++u;
        if (u >= (u64{1} << w_top) - 1) return false;
        Rational right = Rational{BigInt{BigUint{u}}, BigUint::pow2(w_top)} + lambda_max;
        return right <= Rational{BigInt{BigUint{run_start + run_len}}, BigUint::pow2(res)};
    };
    u64 best_start = 0, best_len = 0, run_start = 0, run_len = 0;
    u64 host_start = 0, host_len = 0;
    for (u64 z = 0; z <= blocked.size(); ++z) {
        if (z < blocked.size() && !blocked[z]) {
            if (run_len == 0) run_start = z;
            ++run_len;
        } else if (run_len != 0) {
            if (run_len > best_len) {
                best_len = run_len;
                best_start = run_start;
            }
            if (host_len == 0 && hosts_chain(run_start, run_len)) {
                host_start = run_start;
                host_len = run_len;
            }
            run_len = 0;
        }
    }
    if (best_len == 0)
        throw NoWindowFound("exceptional_scan: every window at resolution 2^-" + std::to_string(res) +
                            " meets an exceptional interval");
    if (host_len != 0) {
        out.z = disc::DyadicInterval{BigUint{host_start}, BigUint{host_start + host_len}, res};
    } else {
        out.z = disc::DyadicInterval{BigUint{best_start}, BigUint{best_start + best_len}, res};
    }
    return out;
}

int sv_bit(int l, std::uint32_t k, const Params& p) {
    u64 w = p.w.at(static_cast<std::size_t>(l));
    u64 size = u64{1} << p.m;
    if (k + w >= size) throw std::invalid_argument("sv_bit: requires k + w_l < 2^m");
    u64 z = (k + w) >> 3;
    u64 g = p.step / 8;
    int acc = 0;
    for (u64 j = 1; j <= static_cast<u64>(l); ++j)
        acc ^= pascal::binom_parity(static_cast<std::int64_t>(z + g * j), static_cast<std::int64_t>(g * j));
    if (p.step == 8) {
        int closed = pascal::binom_parity(static_cast<std::int64_t>(z + 1 + static_cast<u64>(l)),
                                          static_cast<std::int64_t>(l)) ^
                     1;
        if (closed != acc) throw std::logic_error("sv_bit: decimated sum disagrees with the closed form");
    }
    return acc;
}

int gamma_bit(int l, std::uint32_t k, const Params& p, const gf2::BitVec& u_bits, bool bump) {
    int w = static_cast<int>(p.w.at(static_cast<std::size_t>(l)));
    u64 size = u64{1} << p.m;
    if (k + static_cast<u64>(w) >= size) throw std::invalid_argument("gamma_bit: requires k + w_l < 2^m");
    if (u_bits.len() != static_cast<std::size_t>(w))
        throw std::invalid_argument("gamma_bit: u has wrong length");
    gf2::BitVec u = u_bits;
    if (bump) u.set(u.len() - 1, !u.get(u.len() - 1));

    int closed = pascal::xi(w).dot(u) ^ sv_bit(l, k, p);

    pascal::Blocks bl = pascal::submatrices(pascal::Coords{p.m, w, static_cast<int>(k)});
    gf2::BitVec kappa = gf2::vec_mat_mul(bl.c_row, gf2::invert(bl.a));
    gf2::BitVec sel(size - static_cast<u64>(w));
    for (int j = 1; j <= l; ++j) sel.set(static_cast<std::size_t>(p.step) * static_cast<std::size_t>(j), true);
    int algebraic = kappa.dot(u) ^ gf2::vec_mat_mul(kappa, bl.b).dot(sel) ^ bl.d_row.dot(sel);

    if (algebraic != closed)
        throw std::logic_error("gamma_bit: GF(2) solve disagrees with the closed form at l=" +
                               std::to_string(l) + " k=" + std::to_string(k));
    return closed;
}

ACounts a_counts(int l, const Params& p) {
    u64 w = p.w.at(static_cast<std::size_t>(l));
    u64 size = u64{1} << p.m;
    ACounts out;
    for (u64 k = 0; k + w < size; ++k) {
        if (sv_bit(l, static_cast<std::uint32_t>(k), p))
            ++out.sv_one;
        else
            ++out.sv_zero;
    }
    out.a_max = std::max(out.sv_zero, out.sv_one);
    out.q = Rational{BigInt{BigUint{out.a_max}}, BigUint::pow2(static_cast<std::size_t>(p.m))};
    return out;
}

bool attained_z_check(int l, const Params& p) {
    if (!p.native_widths) throw std::invalid_argument("attained_z_check: native widths only");
    int m = p.m;
    u64 w = p.w.at(static_cast<std::size_t>(l));
    u64 zlo = (u64{1} << (m - 3)) - (u64{14} << (m - 7));
    u64 zhi = u64{1} << (m - 3);
    std::vector<std::uint32_t> hits(zhi - zlo, 0);
    for (u64 k = 0; k < (u64{1} << m); ++k) {
        u64 z = (k + w) >> 3;
        if (z >= zlo && z < zhi) ++hits[z - zlo];
    }
    for (std::uint32_t h : hits)
        if (h != 8) return false;
    if (!((8 + p.w.front()) / 8 <= zlo)) return false;
    if (!(((u64{1} << m) - 8 + p.w.back()) / 8 >= zhi - 1)) return false;
    return true;
}

Chain build_chain(const Params& p, const ExceptionalScan& scan) {
    unsigned res = scan.z.resolution;
    u64 zlo = scan.z.lo.to_u64();
    u64 zhi = scan.z.hi.to_u64();
    unsigned w_top = p.w.back();

    // least even anchor with U/2^w inside Z
    u64 u;
    if (w_top >= res) {
        u = zlo << (w_top - res);
    } else {
        u = (zlo + (u64{1} << (res - w_top)) - 1) >> (res - w_top);
    }
    if (u % 2 != 0) ++u;
    auto in_z = [&](u64 candidate) {
        return (static_cast<u128>(candidate) << res) < (static_cast<u128>(zhi) << w_top);
    };
    if (!in_z(u) || u >= (u64{1} << w_top) - 1)
        throw NoWindowFound("build_chain: no even anchor inside the clean window");

    Chain chain;
    chain.z = scan.z;
    chain.levels.assign(static_cast<std::size_t>(p.top_level) + 1, Level{});
    chain.lambda_j = Rational{0};
    for (int l = p.top_level; l >= 0; --l) {
        std::uint32_t w = p.w[static_cast<std::size_t>(l)];
        gf2::BitVec u_bits(w);
        for (std::uint32_t j = 0; j < w; ++j) u_bits.set(j, (u >> (w - 1 - j)) & 1u);
        ACounts ac = a_counts(l, p);
        int xi_u = pascal::xi(static_cast<int>(w)).dot(u_bits);
        Level& lev = chain.levels[static_cast<std::size_t>(l)];
        lev.w = w;
        lev.u = u;
        lev.a0 = xi_u == 0 ? ac.sv_zero : ac.sv_one;  // gamma = xi.u XOR sv
        lev.a1 = xi_u == 0 ? ac.sv_one : ac.sv_zero;
        lev.gamma = lev.a1 > lev.a0 ? 1 : 0;
        lev.q = ac.q;
        lev.v2 = 2 * u + (lev.gamma ? 3 : 1);
        chain.lambda_j += Rational{BigInt{static_cast<std::int64_t>(lev.v2 - 2 * u)},
                                   BigUint::pow2(static_cast<std::size_t>(w) + 1)};
        if (l > 0) {
            std::uint32_t shift = p.w[static_cast<std::size_t>(l) - 1] - w - 1;
            if (static_cast<u64>(shift) + BigUint{lev.v2}.bit_length() > 62)
                throw BudgetExceeded("build_chain: boundary exceeds 2^62");
            u64 next_u = lev.v2 << shift;
            if (next_u % 2 != 0)
                throw BoundaryParityViolation("build_chain: odd boundary at level " + std::to_string(l - 1));
            u = next_u;
        }
    }
    // lambda(J) <= 4 / 2^{w_M}
    if (chain.lambda_j > Rational{BigInt{4}, BigUint::pow2(w_top)})
        throw std::logic_error("build_chain: chain length bound violated");
    // J subset of Z: right end V(0)/2^{w_0} must stay inside
    u64 v2_0 = chain.levels.front().v2;
    std::uint32_t w0 = p.w.front();
    if ((static_cast<u128>(v2_0) << res) > (static_cast<u128>(zhi) << (w0 + 1)))
        throw NoWindowFound("build_chain: chain escapes the clean window");
    return chain;
}

BlockCheck verify_block_inequality(const levin::Digits& d, int l, const Chain& chain, const Params& p) {
    std::uint32_t w = p.w.at(static_cast<std::size_t>(l));
    unsigned q = w + 1;
    const Level& top = chain.levels.back();
    // union J_M u ... u J_l is the contiguous interval [U(M)/2^{w_M}, V(l)/2^{w_l})
    u64 lo = top.u << (q - top.w);
    u64 hi = chain.levels[static_cast<std::size_t>(l)].v2;
    u64 count = 0;
    scan_windows(d, level_first_pos(p, l), p.points_at_level(l), q, [&](u64 v) {
        if (v >= lo && v < hi) ++count;
    });
    Rational lambda_union = Rational{BigInt{BigUint{hi}}, BigUint::pow2(q)} -
                            Rational{BigInt{BigUint{top.u}}, BigUint::pow2(top.w)};
    Rational pts{BigInt{BigUint{p.points_at_level(l)}}};
    Rational half{BigInt{1}, BigUint{2}};
    Rational bound = pts * lambda_union +
                     (chain.levels[static_cast<std::size_t>(l)].q - half) *
                         Rational{BigInt{BigUint::pow2(static_cast<std::size_t>(p.m))}};
    BlockCheck out;
    out.count = count;
    out.bound = bound;
    out.surplus = Rational{BigInt{BigUint{count}}} - bound;
    return out;
}

SurplusBound total_surplus_bound(const Params& p) {
    if (!p.native_widths) throw std::invalid_argument("total_surplus_bound: native widths only");
    SurplusBound out;
    int m = p.m;
    out.ones_bound = Rational{8} * pascal::d_ones_formula(m);
    out.closing_bound = Rational{BigInt{BigUint{217} << (2 * static_cast<std::size_t>(m))}, BigUint::pow2(15)};
    BigUint pow3{1};
    for (int i = 0; i < m - 7; ++i) pow3 *= BigUint{3};
    Rational proviso_lhs = Rational{1} - Rational{BigInt{pow3}, BigUint::pow2(2 * static_cast<std::size_t>(m - 7))};
    out.proviso_met = proviso_lhs >= Rational{BigInt{31}, BigUint{32}};
    out.ones_ge_closing = out.ones_bound >= out.closing_bound;
    if (m <= 13) {
        out.enumerated_available = true;
        for (int l = 0; l <= p.top_level; ++l) out.enumerated_sum += a_counts(l, p).a_max;
        out.enum_ge_ones = Rational{BigInt{BigUint{out.enumerated_sum}}} >= out.ones_bound;
    }
    return out;
}

Rational default_prefix_budget(int m) {
    return Rational{BigInt{BigUint{10} * (BigUint::pow2(static_cast<std::size_t>(m)) - BigUint{2})}};
}

Report final_accounting(const Params& p, const Chain* chain, const levin::Digits* d,
                        const Rational& prefix_epsilon_budget) {
    Report r;
    r.params = p;
    r.n_total = p.n_total();
    r.log2_n = r.n_total.log2();
    r.log_check = r.n_total.bit_length() <= (std::size_t{1} << (p.m + 2));
    Rational m_pow{BigInt{BigUint::pow2(static_cast<std::size_t>(p.m))}};
    Rational levels_count{BigInt{static_cast<std::int64_t>(p.top_level) + 1}};

    if (chain != nullptr && d != nullptr) {
        r.enumerated = true;
        r.has_chain = true;
        r.levels = chain->levels;
        r.lambda_j = chain->lambda_j;
        r.z = chain->z;
        unsigned q = p.w.front() + 1;
        const Level& top = chain->levels.back();
        u64 lo = top.u << (q - top.w);
        u64 hi_top = chain->levels.front().v2;  // V(0) at resolution w_0 + 1
        u64 n_m = levin::block_start(p.m).to_u64();
        u64 prefix_count = 0;
        scan_windows(*d, BigUint{1}, n_m, q, [&](u64 v) {
            if (v >= lo && v < hi_top) ++prefix_count;
        });
        Rational share = Rational{BigInt{BigUint{n_m}}} * chain->lambda_j;
        r.terms.push_back(Term{"prefix_count_minus_share",
                               Rational{BigInt{BigUint{prefix_count}}} - share, TermKind::enumerated});
        for (int l = 0; l <= p.top_level; ++l) {
            u64 count = 0;
            scan_windows(*d, level_first_pos(p, l), p.points_at_level(l), q, [&](u64 v) {
                if (v >= lo && v < hi_top) ++count;
            });
            Rational level_share = Rational{BigInt{BigUint{p.points_at_level(l)}}} * chain->lambda_j;
            r.terms.push_back(Term{"level_" + std::to_string(l) + "_count_minus_share",
                                   Rational{BigInt{BigUint{count}}} - level_share, TermKind::enumerated});
        }
    } else {
        r.enumerated = false;
        r.terms.push_back(Term{"prefix_deviation_budget", -prefix_epsilon_budget, TermKind::assumed});
        // levels l >= 1 see at most 3/2^{w_l + step} of [0,1) below their own
        // piece of the union; the l = 0 term is empty, so M factors, not M+1
        Rational tail = Rational{-3} * Rational{BigInt{p.top_level}} * m_pow *
                        Rational{BigInt{1}, BigUint::pow2(p.step)};
        r.terms.push_back(Term{"tail_overlap_bound", tail, TermKind::closed_form});
        Rational half_corr = -(levels_count * m_pow * Rational{BigInt{1}, BigUint{2}});
        r.terms.push_back(Term{"half_count_correction", half_corr, TermKind::closed_form});
        if (p.native_widths) {
            r.terms.push_back(
                Term{"majority_sum_bound", Rational{8} * pascal::d_ones_formula(p.m), TermKind::closed_form});
        } else {
            BigUint total;
            for (int l = 0; l <= p.top_level; ++l) total += BigUint{a_counts(l, p).a_max};
            r.terms.push_back(Term{"majority_sum", Rational{BigInt{total}}, TermKind::closed_form});
        }
    }

    r.surplus = Rational{0};
    for (const Term& t : r.terms) r.surplus += t.value;
    if (r.log_check && r.surplus > Rational{0}) {
        r.implied_c = r.surplus * Rational{BigInt{1}, BigUint::pow2(2 * static_cast<std::size_t>(p.m) + 4)};
    }
    return r;
}

Report run_construction(const levin::Digits& d, const Params& p, u64 budget_points) {
    ExceptionalScan scan = exceptional_scan(d, p, budget_points);
    Chain chain = build_chain(p, scan);
    Report r = final_accounting(p, &chain, &d, default_prefix_budget(p.m));
    for (std::size_t l = 0; l < scan.exceptional.size(); ++l)
        r.exceptional_counts.push_back(scan.exceptional[l].size());
    r.exceptional_measure_bound = scan.measure_bound;
    for (int l = 0; l <= p.top_level; ++l)
        r.block_checks.push_back(verify_block_inequality(d, l, chain, p));
    return r;
}

namespace {

const char* kind_name(TermKind k) {
    switch (k) {
        case TermKind::enumerated: return "enumerated";
        case TermKind::closed_form: return "closed_form";
        case TermKind::assumed: return "assumed_from_counting_lemma";
    }
    return "?";
}

std::string fmt_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

std::string report_to_text(const Report& r) {
    std::ostringstream os;
    os << "construction:\n";
    os << "  m: " << r.params.m << "\n";
    os << "  top_level: " << r.params.top_level << "\n";
    os << "  step: " << r.params.step << "\n";
    os << "  widths:";
    for (auto w : r.params.w) os << ' ' << w;
    os << "\n";
    os << "  native_widths: " << (r.params.native_widths ? "true" : "false") << "\n";
    os << "  N: " << r.n_total.to_decimal() << "\n";
    os << "  log2_N: " << fmt_double(r.log2_n) << "\n";
    os << "mode: " << (r.enumerated ? "enumerated" : "closed_form") << "\n";
    if (!r.exceptional_counts.empty()) {
        os << "exceptional_scan:\n";
        for (std::size_t l = 0; l < r.exceptional_counts.size(); ++l)
            os << "  level_" << l << "_exceptions: " << r.exceptional_counts[l] << "\n";
        os << "  measure_bound: " << r.exceptional_measure_bound.to_string() << "\n";
        os << "  Z: [" << r.z.lo.to_decimal() << ", " << r.z.hi.to_decimal() << ")/2^" << r.z.resolution
           << "\n";
    }
    if (r.has_chain) {
        os << "chain:\n";
        os << "  lambda_J: " << r.lambda_j.to_string() << "\n";
        for (std::size_t l = r.levels.size(); l-- > 0;) {
            const Level& lev = r.levels[l];
            os << "  level_" << l << ": w=" << lev.w << " U=" << lev.u << " V2=" << lev.v2
               << " gamma=" << lev.gamma << " A0=" << lev.a0 << " A1=" << lev.a1
               << " q=" << lev.q.to_string() << "\n";
        }
    }
    if (!r.block_checks.empty()) {
        os << "block_inequalities:\n";
        for (std::size_t l = 0; l < r.block_checks.size(); ++l) {
            const BlockCheck& b = r.block_checks[l];
            os << "  level_" << l << ": count=" << b.count << " bound=" << b.bound.to_string()
               << " surplus=" << b.surplus.to_string() << "\n";
        }
    }
    os << "ledger:\n";
    for (const Term& t : r.terms)
        os << "  " << t.name << ": " << t.value.to_compact_string() << " [" << kind_name(t.kind) << "]\n";
    os << "surplus: " << r.surplus.to_compact_string() << "\n";
    os << "log_check: " << (r.log_check ? "true" : "false") << "\n";
    os << "implied_c: " << r.implied_c.to_compact_string() << "\n";
    return os.str();
}

namespace {

nlohmann::json rat_json(const Rational& q) {
    return nlohmann::json{{"num", q.num().to_decimal()}, {"den", q.den().to_decimal()}};
}

}  // namespace

std::string report_to_json(const Report& r) {
    nlohmann::json j;
    j["m"] = r.params.m;
    j["top_level"] = r.params.top_level;
    j["step"] = r.params.step;
    j["widths"] = r.params.w;
    j["native_widths"] = r.params.native_widths;
    j["N"] = r.n_total.to_decimal();
    j["log2_N"] = r.log2_n;
    j["mode"] = r.enumerated ? "enumerated" : "closed_form";
    if (!r.exceptional_counts.empty()) {
        j["exceptional_counts"] = r.exceptional_counts;
        j["exceptional_measure_bound"] = rat_json(r.exceptional_measure_bound);
        j["Z"] = {{"lo", r.z.lo.to_decimal()}, {"hi", r.z.hi.to_decimal()}, {"resolution", r.z.resolution}};
    }
    if (r.has_chain) {
        j["lambda_J"] = rat_json(r.lambda_j);
        nlohmann::json levels = nlohmann::json::array();
        for (const Level& lev : r.levels) {
            levels.push_back({{"w", lev.w},
                              {"U", lev.u},
                              {"V2", lev.v2},
                              {"gamma", lev.gamma},
                              {"A0", lev.a0},
                              {"A1", lev.a1},
                              {"q", rat_json(lev.q)}});
        }
        j["levels"] = levels;
    }
    if (!r.block_checks.empty()) {
        nlohmann::json checks = nlohmann::json::array();
        for (const BlockCheck& b : r.block_checks) {
            checks.push_back({{"count", b.count},
                              {"bound", rat_json(b.bound)},
                              {"surplus", rat_json(b.surplus)}});
        }
        j["block_inequalities"] = checks;
    }
    nlohmann::json terms = nlohmann::json::array();
    for (const Term& t : r.terms)
        terms.push_back({{"name", t.name}, {"value", rat_json(t.value)}, {"kind", kind_name(t.kind)}});
    j["ledger"] = terms;
    j["surplus"] = rat_json(r.surplus);
    j["log_check"] = r.log_check;
    j["implied_c"] = rat_json(r.implied_c);
    return j.dump(2) + "\n";
}

}  // namespace levnum::lb
