// Command line front end: digit dumps, point extraction, exact discrepancy,
// the named identity/counting verifications, and construction reports.
// Exit codes: 0 success, 1 failed verification or runtime error, 2 usage.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "levnum/discrepancy.hpp"
#include "levnum/errors.hpp"
#include "levnum/levin_number.hpp"
#include "levnum/lowerbound.hpp"
#include "levnum/pascal.hpp"

namespace {

using levnum::BigInt;
using levnum::BigUint;
using levnum::Rational;
namespace disc = levnum::disc;
namespace gf2 = levnum::gf2;
namespace lb = levnum::lb;
namespace levin = levnum::levin;
namespace pascal = levnum::pascal;

struct Sweep {
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    void tally(bool ok) {
        ++checked;
        if (!ok) ++failures;
    }
    int report(const std::string& what) const {
        std::cout << what << ": identities checked: " << checked << ", failures: " << failures << "\n";
        return failures == 0 ? 0 : 1;
    }
};

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

int cmd_digits(const std::string& out_path, std::uint64_t count, std::uint64_t start, int m_max) {
    levin::Digits digits(m_max);
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    // 8-byte little-endian bit count, then digits packed 8 per byte, most
    // significant bit first
    std::uint64_t n = count;
    char header[8];
    for (int i = 0; i < 8; ++i) header[i] = static_cast<char>((n >> (8 * i)) & 0xff);
    os.write(header, 8);
    levin::Digits::Stream s = digits.stream_at(BigUint{start});
    std::uint8_t byte = 0;
    int used = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        byte = static_cast<std::uint8_t>((byte << 1) | s.next());
        if (++used == 8) {
            os.put(static_cast<char>(byte));
            byte = 0;
            used = 0;
        }
    }
    if (used != 0) os.put(static_cast<char>(byte << (8 - used)));
    os.flush();
    return 0;
}

int cmd_point(const std::string& orbit_dec, unsigned precision, int m_max) {
    levin::Digits digits(m_max);
    BigUint orbit = BigUint::from_decimal(orbit_dec);
    levin::DyadicFraction f = digits.point(orbit, precision);
    std::cout << "orbit_index: " << orbit.to_decimal() << "\n";
    std::cout << "precision: " << f.precision << "\n";
    std::cout << "numerator: " << f.num.to_decimal() << "\n";
    std::cout << "value: " << Rational{BigInt{f.num}, BigUint::pow2(f.precision)}.to_string() << "\n";
    return 0;
}

int cmd_discrepancy(std::uint64_t n_max, unsigned precision, const std::string& out_path) {
    unsigned p = precision;
    if (p == 0) {
        p = 4;
        while ((std::uint64_t{1} << (p - 4)) < n_max) ++p;
    }
    levin::Digits digits(5);
    levin::PointSet ps;
    ps.precision = p;
    ps.origin = levin::Origin{BigUint{0}, n_max};
    levin::Digits::Stream s = digits.stream_at(BigUint{1});
    std::vector<int> window(p, 0);
    for (unsigned j = 0; j < p; ++j) window[j] = s.next();
    for (std::uint64_t n = 0;;) {
        BigUint num;
        for (unsigned j = 0; j < p; ++j)
            if (window[j]) num.set_bit(p - 1 - j);
        ps.nums.push_back(std::move(num));
        if (++n == n_max) break;
        for (unsigned j = 0; j + 1 < p; ++j) window[j] = window[j + 1];
        window[p - 1] = s.next();
    }
    Rational star = disc::star_discrepancy(ps);
    Rational extreme = disc::extreme_discrepancy(ps);
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    os << "N: " << n_max << "\n";
    os << "precision: " << p << "\n";
    os << "star_discrepancy: " << star.to_string() << "\n";
    os << "extreme_discrepancy: " << extreme.to_string() << "\n";
    os << "N_times_extreme: " << (extreme * Rational{BigInt{BigUint{n_max}}}).to_string() << "\n";
    return 0;
}

int cmd_growth(std::uint64_t n_max, const std::string& out_path) {
    levin::Digits digits(5);
    std::vector<std::uint64_t> ns;
    for (std::uint64_t n = 2; n <= n_max; n *= 2) ns.push_back(n);
    auto rows = disc::growth_table(digits, ns);
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    disc::write_growth_csv(os, rows);
    return 0;
}

int verify_lemma1(int m_flag, unsigned gamma_res, bool allow_large) {
    Sweep sweep;
    levin::Digits digits(5);
    int m_lo = m_flag > 0 ? m_flag : 1;
    int m_hi = m_flag > 0 ? m_flag : 4;
    Rational five{5};
    for (int m = m_lo; m <= m_hi; ++m) {
        auto hist = disc::orbit_window_histogram(digits, m, gamma_res, allow_large);
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << gamma_res); ++c) {
            auto res = disc::lemma1_from_histogram(hist, m, c, gamma_res);
            sweep.tally(res.epsilon.abs() < five);
        }
    }
    return sweep.report("lemma1 (|epsilon| < 5)");
}

int verify_lemma2(int m_flag, bool allow_large) {
    Sweep sweep;
    levin::Digits digits(5);
    int m_lo = m_flag > 0 ? m_flag : 3;
    int m_hi = m_flag > 0 ? m_flag : 4;
    for (int m = m_lo; m <= m_hi; ++m) {
        for (unsigned i = 0; i < (1u << m); ++i) {
            std::uint64_t b_count = std::uint64_t{1} << ((std::uint64_t{1} << m) - i);
            for (std::uint64_t b = 0; b < b_count; ++b) {
                auto counts = disc::verify_lemma2(digits, m, i, b, allow_large);
                std::uint64_t exceptions = 0, total = 0;
                for (std::uint64_t c : counts) {
                    if (c != (std::uint64_t{1} << m)) ++exceptions;
                    total += c;
                }
                bool ok = exceptions <= (std::uint64_t{2} << m) &&
                          total == (std::uint64_t{1} << (static_cast<unsigned>(m) + i));
                sweep.tally(ok);
            }
        }
    }
    return sweep.report("lemma2 (exceptions <= 2^(m+1), count conservation)");
}

int verify_lemma3(std::int64_t max_iu) {
    Sweep sweep;
    for (std::int64_t i = 0; i <= max_iu; ++i)
        for (std::int64_t u = 0; u <= max_iu; ++u) sweep.tally(pascal::verify_prefix_sum(i, u).equal());
    return sweep.report("lemma3 (prefix sum identity)");
}

int verify_lemma4() {
    Sweep sweep;
    for (int m = 8; m <= 13; ++m) {
        Rational formula = pascal::d_ones_formula(m);
        sweep.tally(Rational{BigInt{BigUint{pascal::d_ones_enumerated(m)}}} == formula);
    }
    return sweep.report("lemma4 (D_m ones count)");
}

int verify_lemma5(std::uint64_t max_i, int max_groups) {
    Sweep sweep;
    for (std::uint64_t i = 0; i < max_i; ++i)
        for (int g = 0; g <= max_groups; ++g)
            sweep.tally(pascal::verify_decimation(i, pascal::SelectorVec{g}).equal());
    return sweep.report("lemma5 (8-fold decimation)");
}

int verify_lemma6(int max_m) {
    Sweep sweep;
    for (int m = 1; m <= max_m; ++m) {
        int size = 1 << m;
        for (int t = 1; t <= size; ++t) {
            for (int k = 0; k + t <= size - 1; ++k) {
                auto rid = pascal::verify_row_identity(pascal::Coords{m, t, k});
                sweep.tally(rid.c_matches);
                sweep.tally(rid.d_matches);
            }
        }
    }
    return sweep.report("lemma6 (row identities)");
}

int verify_lemma7(std::int64_t max_t, std::int64_t max_kl) {
    Sweep sweep;
    for (std::int64_t t = 0; t <= max_t; ++t)
        for (std::int64_t k = 0; k <= max_kl; ++k)
            for (std::int64_t l = 0; l <= max_kl; ++l)
                sweep.tally(pascal::verify_sum_identity(t, k, l).equal());
    return sweep.report("lemma7 (binomial sum identity)");
}

int verify_corollary1(std::int64_t max_t, std::int64_t max_kl) {
    Sweep sweep;
    for (std::int64_t t = 1; t <= max_t; ++t) {
        for (std::int64_t k = 0; k <= max_kl; ++k) {
            for (std::int64_t l = 0; l <= max_kl; ++l) {
                if (l <= t - 1) {
                    auto pa = pascal::verify_corollary(t, k, l, pascal::CorItem::a);
                    sweep.tally(pa.equal() && pa.lhs == 0);
                    sweep.tally(pascal::verify_corollary(t, k, l, pascal::CorItem::b).equal());
                }
                sweep.tally(pascal::verify_corollary(t, k, l, pascal::CorItem::c).equal());
            }
        }
    }
    return sweep.report("corollary1 (items a, b, c)");
}

int verify_prop1(int max_m) {
    Sweep sweep;
    for (int m = 1; m <= max_m; ++m) {
        int size = 1 << m;
        for (int t = 1; t < size; ++t) {
            gf2::BitVec expected = pascal::xi(t);
            for (int k = 0; k + t < size; ++k) {
                pascal::Coords c{m, t, k};
                sweep.tally(pascal::prop1_kappa(c) == expected);
                for (int v = 0;; ++v) {
                    if (v > 0 && 8 * v >= size - t) break;
                    sweep.tally(pascal::prop1_value(c, v).equal());
                }
            }
        }
    }
    return sweep.report("prop1 (kappa = xi; selector closed form)");
}

int verify_schmidt(std::uint64_t m_len) {
    levin::Digits digits(5);
    unsigned l = (static_cast<unsigned>(BigUint{m_len}.bit_length()) - 1) / 2;
    std::uint64_t u_len = m_len + l;
    unsigned p = std::max(16u, l + 1);

    auto run = [&](const levin::PointSet& ps, const std::string& label) {
        auto outcome = disc::schmidt_witness(ps, m_len);
        if (std::holds_alternative<disc::Witness>(outcome)) {
            const auto& w = std::get<disc::Witness>(outcome);
            std::uint64_t recount = disc::count_in(ps, w.j, w.n);
            Rational lam{BigInt{w.j.hi} - BigInt{w.j.lo}, BigUint::pow2(w.j.resolution)};
            Rational defect =
                (Rational{BigInt{BigUint{recount}}} - Rational{BigInt{BigUint{w.n}}} * lam).abs();
            bool ok = defect == w.defect &&
                      defect >= Rational{BigInt{static_cast<std::int64_t>(l)}, BigUint{4}};
            std::cout << label << ": witness N=" << w.n << " interval=[" << w.j.lo.to_decimal() << ","
                      << w.j.hi.to_decimal() << ")/2^" << w.j.resolution
                      << " defect=" << w.defect.to_string() << (ok ? " (verified)" : " (FAILED)") << "\n";
            return ok;
        }
        const auto& v = std::get<disc::AssumptionViolated>(outcome);
        std::cout << label << ": assumption violated at N=" << v.n
                  << " N*D_N=" << v.n_times_d.to_string() << " log N=" << v.log_n << "\n";
        return v.n_times_d.to_double() > v.log_n;
    };

    levin::PointSet ps;
    ps.precision = p;
    ps.origin = levin::Origin{BigUint{0}, u_len};
    levin::Digits::Stream s = digits.stream_at(BigUint{1});
    std::vector<int> window(p, 0);
    for (unsigned j = 0; j < p; ++j) window[j] = s.next();
    for (std::uint64_t n = 0;;) {
        BigUint num;
        for (unsigned j = 0; j < p; ++j)
            if (window[j]) num.set_bit(p - 1 - j);
        ps.nums.push_back(std::move(num));
        if (++n == u_len) break;
        for (unsigned j = 0; j + 1 < p; ++j) window[j] = window[j + 1];
        window[p - 1] = s.next();
    }
    bool ok = run(ps, "levin-prefix");

    levin::PointSet vdc;
    vdc.precision = p;
    vdc.origin = levin::Origin{BigUint{0}, u_len};
    for (std::uint64_t n = 0; n < u_len; ++n) {
        BigUint num;
        for (unsigned j = 0; j < p; ++j)
            if ((n >> j) & 1u) num.set_bit(p - 1 - j);
        vdc.nums.push_back(std::move(num));
    }
    ok = run(vdc, "van-der-corput") && ok;
    return ok ? 0 : 1;
}

int cmd_construct(int m, int top_level, std::uint32_t w0, std::uint32_t step, std::uint64_t budget,
                  const std::string& format, const std::string& out_path) {
    lb::Params params =
        (w0 != 0) ? lb::reduced_params(m, top_level, w0, step) : lb::default_params(m);
    levin::Digits digits(std::min(std::max(m, 4) + 1, 12));
    lb::Report report = lb::run_construction(digits, params, budget);
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    os << (format == "json" ? lb::report_to_json(report) : lb::report_to_text(report));
    for (const auto& check : report.block_checks)
        if (check.surplus < Rational{0}) return 1;
    return 0;
}

int cmd_surplus(int m, const std::string& format, const std::string& out_path) {
    lb::Params params = lb::default_params(m);
    lb::SurplusBound sb = lb::total_surplus_bound(params);
    lb::Report report = lb::final_accounting(params, nullptr, nullptr, lb::default_prefix_budget(m));
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    if (format == "json") {
        os << lb::report_to_json(report);
    } else {
        os << lb::report_to_text(report);
    }
    os << "surplus_chain:\n";
    if (sb.enumerated_available)
        os << "  enumerated_majority_sum: " << sb.enumerated_sum
           << (sb.enum_ge_ones ? " >= " : " < ") << "8*ones(D_m)\n";
    os << "  ones_bound: " << sb.ones_bound.to_string() << "\n";
    os << "  closing_bound: " << sb.closing_bound.to_string() << "\n";
    os << "  ones_ge_closing: " << (sb.ones_ge_closing ? "true" : "false") << "\n";
    os << "  proviso_met: " << (sb.proviso_met ? "true" : "false") << "\n";
    // the closing link is asserted only under the proviso
    if (sb.proviso_met && !sb.ones_ge_closing) return 1;
    if (sb.enumerated_available && !sb.enum_ge_ones) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for Levin's base-2 normal number: digits, discrepancy, "
                 "Pascal-parity identities, and the lower-bound interval construction"};
    app.require_subcommand(1);

    std::string out_path, format = "text";
    std::uint64_t count = 1024, start = 1, n_max = 1 << 20, budget = std::uint64_t{1} << 26;
    std::uint64_t schmidt_m = 1 << 16;
    std::uint64_t lemma5_max_i = 1 << 12;
    std::string orbit = "0";
    unsigned precision = 0, gamma_res = 10;
    int m = 0, m_max = 5, top_level = -1, max_m6 = 6, max_groups = 16;
    std::int64_t max_t = 32, max_kl = 64, max_iu = 256;
    std::uint32_t w0 = 0, step = 8;
    bool allow_large = false;

    auto* digits_cmd = app.add_subcommand("digits", "dump digits as packed binary");
    digits_cmd->add_option("--count", count, "number of digits");
    digits_cmd->add_option("--start", start, "first digit position (1-based)");
    digits_cmd->add_option("--m-max", m_max, "addressable block cap")->check(CLI::Range(1, 12));
    digits_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* point_cmd = app.add_subcommand("point", "truncated orbit point {2^n alpha}");
    point_cmd->add_option("--n", orbit, "orbit index (decimal, unbounded)")->required();
    point_cmd->add_option("--precision", precision, "truncation bits")->required();
    point_cmd->add_option("--m-max", m_max, "addressable block cap")->check(CLI::Range(1, 12));

    auto* disc_cmd = app.add_subcommand("discrepancy", "exact discrepancy of the orbit prefix");
    disc_cmd->add_option("--n-max", n_max, "prefix length")->required();
    disc_cmd->add_option("--precision", precision, "truncation bits (default: ceil(log2 N) + 4)");
    disc_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* growth_cmd = app.add_subcommand("growth", "N*D_N growth table, N = powers of two");
    growth_cmd->add_option("--n-max", n_max, "largest N");
    growth_cmd->add_option("--out", out_path, "CSV output file (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "run a named verification sweep");
    std::string which;
    verify_cmd
        ->add_option("name", which,
                     "lemma1|lemma2|lemma3|lemma4|lemma5|lemma6|lemma7|corollary1|prop1|schmidt")
        ->required();
    verify_cmd->add_option("--m", m, "restrict to one block (lemma1/lemma2)");
    verify_cmd->add_option("--max-m", max_m6, "largest m for exhaustive sweeps (lemma6/prop1)")
        ->check(CLI::Range(1, 6));
    verify_cmd->add_option("--gamma-resolution", gamma_res, "gamma grid 2^-r (lemma1)");
    verify_cmd->add_option("--max-t", max_t, "largest t (lemma7/corollary1)");
    verify_cmd->add_option("--max-kl", max_kl, "largest k and l (lemma7/corollary1)");
    verify_cmd->add_option("--max-iu", max_iu, "largest i and u (lemma3)");
    verify_cmd->add_option("--max-i", lemma5_max_i, "row sweep bound (lemma5)");
    verify_cmd->add_option("--max-groups", max_groups, "largest selector group count (lemma5)");
    verify_cmd->add_option("--M", schmidt_m, "prefix parameter M (schmidt)");
    verify_cmd->add_flag("--allow-large", allow_large, "permit block-5 enumerations");

    auto* construct_cmd = app.add_subcommand("construct", "run the interval chain construction");
    construct_cmd->add_option("--m", m, "digit block")->required();
    construct_cmd->add_option("--M", top_level, "top level index (reduced runs)");
    construct_cmd->add_option("--w0", w0, "base width (reduced runs; omit for native widths)");
    construct_cmd->add_option("--step", step, "width step, multiple of 8");
    construct_cmd->add_option("--budget-points", budget, "enumeration budget");
    construct_cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    construct_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* surplus_cmd = app.add_subcommand("surplus", "closing-estimate arithmetic at native widths");
    surplus_cmd->add_option("--m", m, "digit block")->required();
    surplus_cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    surplus_cmd->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (digits_cmd->parsed()) return cmd_digits(out_path, count, start, m_max);
        if (point_cmd->parsed()) return cmd_point(orbit, precision, m_max);
        if (disc_cmd->parsed()) return cmd_discrepancy(n_max, precision, out_path);
        if (growth_cmd->parsed()) return cmd_growth(n_max, out_path);
        if (verify_cmd->parsed()) {
            if (which == "lemma1") return verify_lemma1(m, gamma_res, allow_large);
            if (which == "lemma2") return verify_lemma2(m, allow_large);
            if (which == "lemma3") return verify_lemma3(max_iu);
            if (which == "lemma4") return verify_lemma4();
            if (which == "lemma5") return verify_lemma5(lemma5_max_i, max_groups);
            if (which == "lemma6") return verify_lemma6(max_m6);
            if (which == "lemma7") return verify_lemma7(max_t, max_kl);
            if (which == "corollary1") return verify_corollary1(max_t, max_kl);
            if (which == "prop1") return verify_prop1(max_m6);
            if (which == "schmidt") return verify_schmidt(schmidt_m);
            std::cerr << "unknown verification '" << which
                      << "'; expected lemma1..lemma7, corollary1, prop1 or schmidt\n";
            return 2;
        }
        if (construct_cmd->parsed()) {
            if (w0 != 0 && top_level < 0) {
                std::cerr << "--w0 requires --M\n";
                return 2;
            }
            return cmd_construct(m, top_level, w0, step, budget, format, out_path);
        }
        if (surplus_cmd->parsed()) return cmd_surplus(m, format, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
