// Acceptance suite: every criterion prints one PASS/FAIL line; the binary
// exits nonzero if any criterion fails. Expected values tagged as derived
// were computed with the independent oracles in oracles.hpp.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "levnum/discrepancy.hpp"
#include "levnum/errors.hpp"
#include "levnum/levin_number.hpp"
#include "levnum/lowerbound.hpp"
#include "levnum/pascal.hpp"
#include "oracles.hpp"

using namespace levnum;
namespace pas = levnum::pascal;

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

struct Harness {
    int failures = 0;
    int index = 0;
    void run(const std::string& label, const std::function<bool(std::string&)>& body) {
        ++index;
        std::string detail;
        bool ok = false;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %02d %-34s (%6.2f s)%s%s\n", ok ? "PASS" : "FAIL", index, label.c_str(), secs,
                    detail.empty() ? "" : "  -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

// growth-ratio ceiling over N = 2^10..2^20, captured on the first run of
// criterion 11 (attained at N = 2^13, N*D_N = 553/16) and regression-checked
// within +-10% since
constexpr double kGrowthRatioBaseline = 0.20451183431952663;

bool criterion_lucas(std::string& detail) {
    auto table = oracle::parity_table(1022);
    u64 checked = 0;
    for (u64 i = 0; i < 512; ++i)
        for (u64 j = 0; j < 512; ++j) {
            if (pas::entry(i, j) != table[i + j][j]) {
                detail = "mismatch at i=" + std::to_string(i) + " j=" + std::to_string(j);
                return false;
            }
            ++checked;
        }
    detail = std::to_string(checked) + " entries (all pairs i, j < 512)";
    return checked == 262144;
}

bool criterion_sum_identities(std::string& detail) {
    auto table = oracle::parity_table(161);
    auto oracle_term = [&](i64 t, i64 k, i64 l, i64 j) {
        return table[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] &
               table[static_cast<std::size_t>(k + l + j)][static_cast<std::size_t>(l)];
    };
    u64 checked = 0;
    for (i64 t = 0; t <= 32; ++t) {
        for (i64 k = 0; k <= 64; ++k) {
            for (i64 l = 0; l <= 64; ++l) {
                auto full = pas::verify_sum_identity(t, k, l);
                int expect = 0;
                for (i64 j = 0; j <= t; ++j) expect ^= oracle_term(t, k, l, j);
                if (!full.equal() || full.lhs != expect) {
                    detail = "lemma7 fails at t=" + std::to_string(t) + " k=" + std::to_string(k) +
                             " l=" + std::to_string(l);
                    return false;
                }
                ++checked;
                if (t >= 1) {
                    int truncated = expect ^ oracle_term(t, k, l, t);
                    if (l <= t - 1) {
                        auto a = pas::verify_corollary(t, k, l, pas::CorItem::a);
                        auto b = pas::verify_corollary(t, k, l, pas::CorItem::b);
                        if (!a.equal() || a.lhs != 0 || !b.equal() || b.lhs != truncated) {
                            detail = "corollary a/b fails at t=" + std::to_string(t);
                            return false;
                        }
                        checked += 2;
                    }
                    auto c = pas::verify_corollary(t, k, l, pas::CorItem::c);
                    if (!c.equal() || c.lhs != truncated) {
                        detail = "corollary c fails at t=" + std::to_string(t);
                        return false;
                    }
                    ++checked;
                }
            }
        }
    }
    detail = std::to_string(checked) + " identities";
    return true;
}

bool criterion_regularity(std::string& detail) {
    u64 checked = 0;
    for (int m = 1; m <= 6; ++m) {
        int size = 1 << m;
        for (int t = 1; t <= size; ++t) {
            for (int k = 0; k + t <= size; ++k) {
                auto blocks = pas::submatrices(pas::Coords{m, t, k});  // throws on rank < t
                if (gf2::rank(blocks.a) != static_cast<std::size_t>(t)) {
                    detail = "rank defect at m=" + std::to_string(m) + " t=" + std::to_string(t);
                    return false;
                }
                ++checked;
            }
        }
    }
    detail = std::to_string(checked) + " blocks";
    return true;
}

bool criterion_row_identities(std::string& detail) {
    u64 checked = 0;
    for (int m = 1; m <= 6; ++m) {
        int size = 1 << m;
        for (int t = 1; t <= size; ++t) {
            for (int k = 0; k + t <= size - 1; ++k) {
                auto rid = pas::verify_row_identity(pas::Coords{m, t, k});
                if (!rid.c_matches || !rid.d_matches) {
                    detail = "row identity fails at m=" + std::to_string(m) + " t=" + std::to_string(t) +
                             " k=" + std::to_string(k);
                    return false;
                }
                ++checked;
            }
        }
        for (int t = 1; t < size; ++t) {
            gf2::BitVec expect = pas::xi(t);
            for (int k = 0; k + t < size; ++k) {
                pas::Coords c{m, t, k};
                if (!(pas::prop1_kappa(c) == expect)) {
                    detail = "kappa differs from xi at m=" + std::to_string(m) + " t=" + std::to_string(t);
                    return false;
                }
                ++checked;
                for (int v = 0;; ++v) {
                    if (v > 0 && 8 * v >= size - t) break;
                    if (!pas::prop1_value(c, v).equal()) {
                        detail = "selector value mismatch at m=" + std::to_string(m) +
                                 " t=" + std::to_string(t) + " k=" + std::to_string(k) +
                                 " v=" + std::to_string(v);
                        return false;
                    }
                    ++checked;
                }
            }
        }
    }
    detail = std::to_string(checked) + " identities";
    return true;
}

bool criterion_dm_ones(std::string& detail) {
    for (int m = 8; m <= 13; ++m) {
        Rational formula = pas::d_ones_formula(m);
        if (Rational{BigInt{BigUint{pas::d_ones_enumerated(m)}}} != formula) {
            detail = "count mismatch at m=" + std::to_string(m);
            return false;
        }
    }
    detail = "m = 8..13, incl. 14 of 56 at m=8";
    return pas::d_ones_enumerated(8) == 14;
}

bool criterion_prefix_and_decimation(std::string& detail) {
    u64 checked = 0;
    for (i64 i = 0; i <= 256; ++i)
        for (i64 u = 0; u <= 256; ++u) {
            if (!pas::verify_prefix_sum(i, u).equal()) {
                detail = "prefix sum fails at i=" + std::to_string(i) + " u=" + std::to_string(u);
                return false;
            }
            ++checked;
        }
    for (u64 i = 0; i < (u64{1} << 12); ++i)
        for (int g = 0; g <= 16; ++g) {
            if (!pas::verify_decimation(i, pas::SelectorVec{g}).equal()) {
                detail = "decimation fails at i=" + std::to_string(i) + " groups=" + std::to_string(g);
                return false;
            }
            ++checked;
        }
    detail = std::to_string(checked) + " identities";
    return true;
}

// direct-definition digit evaluator sharing no code with the streaming path
int direct_digit(u64 index1, const std::vector<std::vector<int>>& parity) {
    u64 start = 0;
    int m = 1;
    for (;;) {
        u64 block = (u64{1} << m) << (u64{1} << m);
        if (index1 <= start + block) break;
        start += block;
        ++m;
    }
    u64 offset = index1 - start - 1;
    u64 size = u64{1} << m;
    u64 n = offset / size, k = offset % size;
    int acc = 0;
    for (u64 j = 0; j < size; ++j)
        if ((n >> j) & 1u) acc ^= parity[k + j][j];
    return acc;
}

bool criterion_digit_oracle(std::string& detail) {
    levin::Digits d(5);
    int first8[8] = {0, 0, 1, 1, 1, 0, 0, 1};
    for (int i = 0; i < 8; ++i)
        if (d.at(static_cast<u64>(i + 1)) != first8[i]) {
            detail = "first digits differ";
            return false;
        }
    auto parity = oracle::parity_table(16);
    u64 limit = levin::block_start(4).to_u64();  // blocks 1..3: 8 + 64 + 2048 digits
    levin::Digits::Stream s = d.stream_at(BigUint{1});
    for (u64 i = 1; i <= limit; ++i) {
        if (s.next() != direct_digit(i, parity)) {
            detail = "digit mismatch at position " + std::to_string(i);
            return false;
        }
    }
    detail = std::to_string(limit) + " digits vs direct definition";
    return true;
}

bool criterion_counting_lemma1(std::string& detail) {
    levin::Digits d(5);
    Rational five{5};
    Rational worst{0};
    for (int m = 1; m <= 4; ++m) {
        auto hist = disc::orbit_window_histogram(d, m, 10);
        for (u64 c = 0; c < 1024; ++c) {
            auto res = disc::lemma1_from_histogram(hist, m, c, 10);
            Rational mag = res.epsilon.abs();
            if (mag > worst) worst = mag;
            if (!(mag < five)) {
                detail = "epsilon " + mag.to_string() + " at m=" + std::to_string(m) +
                         " gamma=" + std::to_string(c) + "/1024";
                return false;
            }
        }
    }
    detail = "4096 gammas, worst |eps| = " + worst.to_string();
    return true;
}

bool criterion_counting_lemma2(std::string& detail) {
    levin::Digits d(5);
    u64 swept = 0;
    u64 worst_exceptions = 0;
    for (int m = 3; m <= 4; ++m) {
        u64 expected = u64{1} << m;
        for (unsigned i = 0; i < (1u << m); ++i) {
            u64 b_count = u64{1} << ((u64{1} << m) - i);
            for (u64 b = 0; b < b_count; ++b) {
                auto counts = disc::verify_lemma2(d, m, i, b);
                u64 exceptions = 0, total = 0;
                for (u64 c : counts) {
                    total += c;
                    if (c != expected) ++exceptions;
                }
                if (exceptions > worst_exceptions) worst_exceptions = exceptions;
                if (exceptions > 2 * expected || total != (expected << i)) {
                    detail = "violation at m=" + std::to_string(m) + " i=" + std::to_string(i) +
                             " B=" + std::to_string(b);
                    return false;
                }
                ++swept;
            }
        }
    }
    detail = std::to_string(swept) + " (m,i,B) cells, worst exception count " +
             std::to_string(worst_exceptions);
    return true;
}

bool criterion_engines(std::string& detail) {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 100; ++trial) {
        unsigned p = 1 + static_cast<unsigned>(rng() % 8);
        u64 n = 1 + rng() % 128;
        levin::PointSet ps;
        ps.precision = p;
        for (u64 i = 0; i < n; ++i) ps.nums.emplace_back(rng() & ((u64{1} << p) - 1));
        Rational ext = disc::extreme_discrepancy(ps);
        Rational star = disc::star_discrepancy(ps);
        if (ext != disc::brute_force_discrepancy(ps, p)) {
            detail = "extreme != brute force at trial " + std::to_string(trial);
            return false;
        }
        if (!(star <= ext && ext <= star * Rational{2})) {
            detail = "sandwich fails at trial " + std::to_string(trial);
            return false;
        }
    }
    detail = "100 random sets";
    return true;
}

bool criterion_growth(std::string& detail) {
    levin::Digits d(5);
    std::vector<u64> ns;
    for (int e = 10; e <= 20; ++e) ns.push_back(u64{1} << e);
    auto rows = disc::growth_table(d, ns);
    double max_ratio = 0;
    for (const auto& r : rows) {
        if (!r.ratio_defined) {
            detail = "undefined ratio in range";
            return false;
        }
        if (r.ratio > max_ratio) max_ratio = r.ratio;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max ratio %.6f", max_ratio);
    detail = buf;
    if (kGrowthRatioBaseline < 0) {
        detail += " (baseline not pinned yet)";
        return false;
    }
    return max_ratio <= 1.1 * kGrowthRatioBaseline && max_ratio >= 0.9 * kGrowthRatioBaseline;
}

bool criterion_reduced_construction(std::string& detail) {
    levin::Digits d(6);
    for (int m : {4, 5}) {
        auto p = lb::reduced_params(m, 1, 11, 8);
        auto scan = lb::exceptional_scan(d, p);
        if (!(scan.z.lo < scan.z.hi) ||
            !(Rational{BigInt{scan.z.hi} - BigInt{scan.z.lo}, BigUint::pow2(scan.z.resolution)} >=
              Rational{BigInt{1}, BigUint::pow2(2 * static_cast<unsigned>(m) + 1)})) {
            detail = "no valid clean window at m=" + std::to_string(m);
            return false;
        }
        lb::Chain chain;
        try {
            chain = lb::build_chain(p, scan);
        } catch (const NoWindowFound& e) {
            // at widths (11, 3) every even anchor point on the 1/4 grid meets
            // an exceptional interval (enumerated fact, cross-checked through
            // two independent counting routes), so no clean window can host
            // the chain; the same machinery passes at w0 = 13 in the unit
            // tests, where the anchor grid is four times finer
            detail = std::string("m=") + std::to_string(m) + ": " + e.what();
            return false;
        }
        for (int l = 0; l <= p.top_level; ++l) {
            auto check = lb::verify_block_inequality(d, l, chain, p);
            if (check.surplus < Rational{0}) {
                detail = "negative surplus at m=" + std::to_string(m) + " level " + std::to_string(l);
                return false;
            }
        }
    }
    detail = "both parameter sets";
    return true;
}

bool criterion_native_counting(std::string& detail) {
    for (int m : {8, 10, 12}) {
        auto p = lb::default_params(m);
        for (int l = 0; l <= p.top_level; ++l) {
            if (!lb::attained_z_check(l, p)) {
                detail = "z attainment fails at m=" + std::to_string(m) + " l=" + std::to_string(l);
                return false;
            }
        }
    }
    for (int m = 8; m <= 12; ++m) {
        auto sb = lb::total_surplus_bound(lb::default_params(m));
        if (!sb.enumerated_available || !sb.enum_ge_ones) {
            detail = "majority sum below the D_m bound at m=" + std::to_string(m);
            return false;
        }
    }
    auto sb20 = lb::total_surplus_bound(lb::default_params(20));
    if (!(sb20.proviso_met && sb20.ones_ge_closing)) {
        detail = "closing inequality fails at m=20";
        return false;
    }
    auto sb8 = lb::total_surplus_bound(lb::default_params(8));
    if (sb8.proviso_met || sb8.ones_ge_closing) {
        detail = "m=8 should report the closing link false under the proviso";
        return false;
    }
    detail = "z-attainment m=8,10,12; sums m=8..12; closing arithmetic m=20 (false at m=8)";
    return true;
}

bool criterion_schmidt(std::string& detail) {
    levin::Digits d(5);
    u64 m_len = u64{1} << 16;
    unsigned l = 8;
    u64 u_len = m_len + l;
    unsigned p = 16;

    auto verify = [&](const levin::PointSet& ps, const char* label) {
        auto outcome = disc::schmidt_witness(ps, m_len);
        if (std::holds_alternative<disc::Witness>(outcome)) {
            const auto& w = std::get<disc::Witness>(outcome);
            Rational lam{BigInt{w.j.hi} - BigInt{w.j.lo}, BigUint::pow2(w.j.resolution)};
            Rational recount = (Rational{BigInt{BigUint{disc::count_in(ps, w.j, w.n)}}} -
                                Rational{BigInt{BigUint{w.n}}} * lam)
                                   .abs();
            if (recount != w.defect || !(w.defect >= Rational{BigInt{i64{l}}, BigUint{4}})) {
                detail = std::string(label) + ": witness fails recount";
                return false;
            }
            return true;
        }
        const auto& v = std::get<disc::AssumptionViolated>(outcome);
        levin::PointSet head;
        head.precision = ps.precision;
        head.nums.assign(ps.nums.begin(), ps.nums.begin() + static_cast<std::ptrdiff_t>(v.n));
        Rational engine = disc::extreme_discrepancy(head) * Rational{BigInt{BigUint{v.n}}};
        if (engine != v.n_times_d || !(engine.to_double() > v.log_n)) {
            detail = std::string(label) + ": violation fails engine recheck";
            return false;
        }
        return true;
    };

    levin::PointSet prefix;
    prefix.precision = p;
    {
        levin::Digits::Stream s = d.stream_at(BigUint{1});
        std::vector<int> window(p);
        for (unsigned j = 0; j < p; ++j) window[j] = s.next();
        for (u64 n = 0;;) {
            BigUint num;
            for (unsigned j = 0; j < p; ++j)
                if (window[j]) num.set_bit(p - 1 - j);
            prefix.nums.push_back(std::move(num));
            if (++n == u_len) break;
            for (unsigned j = 0; j + 1 < p; ++j) window[j] = window[j + 1];
            window[p - 1] = s.next();
        }
    }
    if (!verify(prefix, "levin")) return false;

    levin::PointSet vdc;
    vdc.precision = 18;
    for (u64 n = 0; n < u_len; ++n) {
        BigUint num;
        for (unsigned j = 0; j < 18; ++j)
            if ((n >> j) & 1u) num.set_bit(17 - j);
        vdc.nums.push_back(std::move(num));
    }
    if (!verify(vdc, "van der corput")) return false;
    detail = "levin prefix and van der corput control certified";
    return true;
}

}  // namespace

int main() {
    Harness h;
    h.run("lucas parity, i,j < 512", criterion_lucas);
    h.run("sum identities t<=32, k,l<=64", criterion_sum_identities);
    h.run("block regularity m<=6", criterion_regularity);
    h.run("row identities + selector m<=6", criterion_row_identities);
    h.run("D_m ones count m=8..13", criterion_dm_ones);
    h.run("prefix sum + decimation", criterion_prefix_and_decimation);
    h.run("digit oracle, blocks 1..3", criterion_digit_oracle);
    h.run("counting lemma [0,gamma), m<=4", criterion_counting_lemma1);
    h.run("per-interval counts, m=3,4", criterion_counting_lemma2);
    h.run("discrepancy engines agree", criterion_engines);
    h.run("growth ratios vs baseline", criterion_growth);
    h.run("reduced-scale construction", criterion_reduced_construction);
    h.run("native-scale counting core", criterion_native_counting);
    h.run("schmidt witness, M=2^16", criterion_schmidt);
    if (h.failures != 0) std::printf("%d criterion(s) failed\n", h.failures);
    return h.failures == 0 ? 0 : 1;
}
