#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>
#include <vector>

#include "levnum/discrepancy.hpp"
#include "levnum/errors.hpp"
#include "levnum/levin_number.hpp"

using namespace levnum;
using disc::DyadicInterval;
using levin::PointSet;

namespace {

PointSet make_points(unsigned precision, const std::vector<std::uint64_t>& nums) {
    PointSet ps;
    ps.precision = precision;
    for (auto v : nums) ps.nums.emplace_back(v);
    return ps;
}

PointSet random_points(std::mt19937_64& rng, std::uint64_t n, unsigned p) {
    PointSet ps;
    ps.precision = p;
    for (std::uint64_t i = 0; i < n; ++i) ps.nums.emplace_back(rng() & ((std::uint64_t{1} << p) - 1));
    return ps;
}

Rational rat(std::int64_t num, std::uint64_t den) { return Rational{BigInt{num}, BigUint{den}}; }

}  // namespace

TEST_CASE("count_in basics") {
    auto ps = make_points(4, {0, 3, 8, 15});
    CHECK(disc::count_in(ps, DyadicInterval{BigUint{0}, BigUint{1}, 0}) == 4);
    auto zero = make_points(3, {0});
    CHECK(disc::count_in(zero, DyadicInterval{BigUint{1}, BigUint{2}, 1}) == 0);
    CHECK_THROWS_AS(disc::count_in(zero, DyadicInterval{BigUint{0}, BigUint{1}, 9}),
                    ResolutionExceedsPrecision);
    CHECK_THROWS_AS(disc::count_in(zero, DyadicInterval{BigUint{2}, BigUint{1}, 2}), std::invalid_argument);
}

TEST_CASE("count_in against a rational scan oracle on block-1 points") {
    levin::Digits d(5);
    auto ps = d.block_points(1, 0, 4, 0, 2, 2);
    DyadicInterval j{BigUint{0}, BigUint{1}, 1};  // [0, 1/2)
    std::uint64_t expect = 0;
    for (const auto& num : ps.nums) {
        // value = num / 4; membership decided with exact rationals
        if (Rational{BigInt{num}, BigUint{4}} < rat(1, 2)) ++expect;
    }
    CHECK(disc::count_in(ps, j) == expect);
}

TEST_CASE("count_in is additive and monotone") {
    std::mt19937_64 rng(19);
    auto ps = random_points(rng, 100, 8);
    for (int trial = 0; trial < 50; ++trial) {
        std::uint64_t a = rng() % 255, b = a + 1 + rng() % (256 - a - 1), mid = a + (b - a) / 2;
        if (mid == a || mid == b) continue;
        DyadicInterval whole{BigUint{a}, BigUint{b}, 8}, left{BigUint{a}, BigUint{mid}, 8},
            right{BigUint{mid}, BigUint{b}, 8};
        CHECK(disc::count_in(ps, whole) == disc::count_in(ps, left) + disc::count_in(ps, right));
        CHECK(disc::count_in(ps, left) <= disc::count_in(ps, whole));
    }
}

TEST_CASE("star discrepancy examples") {
    CHECK(disc::star_discrepancy(make_points(1, {0, 1})) == rat(1, 2));
    // centered grid {(2i-1)/2N}: star = 1/(2N)
    for (unsigned n : {4u, 8u}) {
        std::vector<std::uint64_t> nums;
        for (unsigned i = 1; i <= n; ++i) nums.push_back(2 * i - 1);
        unsigned p = 1;
        while ((1u << p) < 2 * n) ++p;
        CHECK(disc::star_discrepancy(make_points(p, nums)) == rat(1, 2 * n));
    }
    CHECK(disc::star_discrepancy(make_points(3, {0, 0, 0, 0})) == Rational{1});
    CHECK_THROWS_AS(disc::star_discrepancy(PointSet{}), std::invalid_argument);
}

TEST_CASE("extreme discrepancy examples") {
    CHECK(disc::extreme_discrepancy(make_points(2, {0})) == Rational{1});
    CHECK(disc::extreme_discrepancy(make_points(1, {0, 1})) == rat(1, 2));
    CHECK(disc::extreme_discrepancy(make_points(2, {1})) == Rational{1});  // single point at 1/4
}

TEST_CASE("brute force examples") {
    CHECK(disc::brute_force_discrepancy(make_points(4, {0, 8}), 4) == rat(1, 2));
    // full uniform grid at resolution q: discrepancy 1/N
    std::vector<std::uint64_t> grid;
    for (std::uint64_t i = 0; i < 16; ++i) grid.push_back(i);
    CHECK(disc::brute_force_discrepancy(make_points(4, grid), 4) == rat(1, 16));
}

TEST_CASE("engines agree: extreme equals brute force at full resolution") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        unsigned p = 1 + rng() % 8;
        std::uint64_t n = 1 + rng() % 128;
        auto ps = random_points(rng, n, p);
        Rational ext = disc::extreme_discrepancy(ps);
        Rational star = disc::star_discrepancy(ps);
        CHECK(ext == disc::brute_force_discrepancy(ps, p));
        CHECK(star <= ext);
        CHECK(ext <= star * Rational{2});
        // lower resolutions can only lose candidates
        if (p > 1) CHECK(disc::brute_force_discrepancy(ps, p - 1) <= ext);
    }
}

TEST_CASE("engines agree on every tiny multiset exhaustively") {
    // all multisets from the 2-bit grid up to size 3, both engine routes
    std::vector<std::vector<std::uint64_t>> sets;
    for (std::uint64_t a = 0; a < 4; ++a) {
        sets.push_back({a});
        for (std::uint64_t b = a; b < 4; ++b) {
            sets.push_back({a, b});
            for (std::uint64_t c = b; c < 4; ++c) sets.push_back({a, b, c});
        }
    }
    for (const auto& nums : sets) {
        auto ps = make_points(2, nums);
        CHECK(disc::extreme_discrepancy(ps) == disc::brute_force_discrepancy(ps, 2));
    }
}

TEST_CASE("growth handles non-power-of-two prefix lengths") {
    levin::Digits d(5);
    auto rows = disc::growth_table(d, {3, 1000});
    levin::PointSet ps;
    ps.precision = rows[0].precision;
    for (std::uint64_t n = 0; n < 3; ++n) ps.nums.push_back(d.point(BigUint{n}, ps.precision).num);
    CHECK(rows[0].n_times_d == disc::extreme_discrepancy(ps) * Rational{3});
    CHECK(rows[1].precision == 14);  // ceil(log2 1000) + 4
    CHECK_THROWS_AS(disc::growth_table(d, {8, 8}), std::invalid_argument);
}

TEST_CASE("extreme dominates every dyadic interval defect") {
    std::mt19937_64 rng(23);
    auto ps = random_points(rng, 60, 8);
    Rational ext = disc::extreme_discrepancy(ps);
    for (int trial = 0; trial < 100; ++trial) {
        std::uint64_t a = rng() % 256, b = a + 1 + rng() % (256 - a);
        if (b > 256) continue;
        DyadicInterval j{BigUint{a}, BigUint{b}, 8};
        Rational lam = rat(static_cast<std::int64_t>(b - a), 256);
        Rational defect =
            (Rational{BigInt{BigUint{disc::count_in(ps, j)}}} * rat(1, 60) - lam).abs();
        CHECK(defect <= ext);
    }
}

TEST_CASE("lemma 1 verifier") {
    levin::Digits d(5);
    auto zero = disc::verify_lemma1(d, 2, 0, 10);
    CHECK(zero.count.is_zero());
    CHECK(zero.epsilon.is_zero());
    auto half = disc::verify_lemma1(d, 2, 512, 10);  // gamma = 1/2
    CHECK(half.epsilon.abs() < Rational{5});
    // independent route: enumerate the block's points and count them
    auto ps = d.block_points(2, 0, 16, 0, 4, 10);
    CHECK(disc::count_in(ps, DyadicInterval{BigUint{0}, BigUint{512}, 10}) == half.count.to_u64());
    // epsilon = (count - gamma*block)/2^m
    Rational expect_eps =
        (Rational{BigInt{half.count}} - rat(1, 2) * Rational{64}) * rat(1, 4);
    CHECK(half.epsilon == expect_eps);
    CHECK_THROWS_AS(disc::verify_lemma1(d, 5, 1, 10), BudgetExceeded);
}

TEST_CASE("lemma 1 full sweep at m <= 3") {
    levin::Digits d(5);
    for (int m = 1; m <= 3; ++m) {
        auto hist = disc::orbit_window_histogram(d, m, 10);
        for (std::uint64_t c = 0; c < 1024; ++c) {
            auto res = disc::lemma1_from_histogram(hist, m, c, 10);
            CHECK(res.epsilon.abs() < Rational{5});
        }
    }
}

TEST_CASE("lemma 2 verifier") {
    levin::Digits d(5);
    auto trivial = disc::verify_lemma2(d, 3, 0, 5);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0] == 8);
    // independent route via block_points for m=2, i=3, B=1
    auto counts = disc::verify_lemma2(d, 2, 3, 1);
    auto ps = d.block_points(2, 8, 16, 0, 4, 3);
    for (std::uint64_t c = 0; c < 8; ++c) {
        CHECK(counts[c] == disc::count_in(ps, DyadicInterval{BigUint{c}, BigUint{c + 1}, 3}));
    }
    // exception bound and count conservation over the smaller blocks in
    // full, the larger ones on a stride (the acceptance suite sweeps all)
    std::uint64_t total = 0, exceptions = 0;
    for (int m = 1; m <= 4; ++m) {
        for (unsigned i = 0; i < (1u << m); m <= 2 ? ++i : i += 5) {
            std::uint64_t b_count = std::uint64_t{1} << ((std::uint64_t{1} << m) - i);
            for (std::uint64_t b = 0; b < b_count; m <= 2 ? ++b : b += b_count / 2 + 1) {
                auto cs = disc::verify_lemma2(d, m, i, b);
                total = 0;
                exceptions = 0;
                for (auto c : cs) {
                    total += c;
                    if (c != (std::uint64_t{1} << m)) ++exceptions;
                }
                CHECK(total == (std::uint64_t{1} << m) << i);
                CHECK(exceptions <= (std::uint64_t{2} << m));
            }
        }
    }
}

TEST_CASE("block-5 counting runs behind the long-run flag") {
    levin::Digits d(5);
    CHECK_THROWS_AS(disc::verify_lemma2(d, 5, 3, 17), BudgetExceeded);
    auto counts = disc::verify_lemma2(d, 5, 3, 17, true);  // one cell: 2^(5+3) windows
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    CHECK(total == (std::uint64_t{1} << 8));
    // same cell through the generic point path
    auto ps = d.block_points(5, 17 * 8, 18 * 8, 0, 32, 3);
    for (std::uint64_t c = 0; c < 8; ++c)
        CHECK(counts[c] == disc::count_in(ps, DyadicInterval{BigUint{c}, BigUint{c + 1}, 3}));
}

TEST_CASE("growth table") {
    levin::Digits d(5);
    auto rows = disc::growth_table(d, {1, 8, 1024});
    REQUIRE(rows.size() == 3);
    CHECK_FALSE(rows[0].ratio_defined);
    CHECK(rows[1].precision == 7);
    // independent check at N=8: points built through point(), engine run directly
    PointSet ps;
    ps.precision = 7;
    for (std::uint64_t n = 0; n < 8; ++n) ps.nums.push_back(d.point(BigUint{n}, 7).num);
    Rational expect = disc::extreme_discrepancy(ps) * Rational{8};
    CHECK(rows[1].n_times_d == expect);
    CHECK(rows[1].n_times_d == disc::brute_force_discrepancy(ps, 7) * Rational{8});
    CHECK(rows[2].ratio_defined);
    CHECK(rows[2].ratio > 0.0);
    CHECK(rows[2].enclosure_width == Rational{BigInt{1}, BigUint::pow2(13)});

    std::ostringstream os;
    disc::write_growth_csv(os, rows);
    std::string csv = os.str();
    CHECK(csv.rfind("N,ND_N_num,ND_N_den,log2N_sq,ratio\n", 0) == 0);
    CHECK(csv.find("\n1,") != std::string::npos);
}

TEST_CASE("schmidt witness on the orbit prefix") {
    levin::Digits d(5);
    std::uint64_t m_len = 1 << 12;
    unsigned l = 6;  // floor(12/2)
    std::uint64_t u_len = m_len + l;
    PointSet ps;
    ps.precision = 16;
    for (std::uint64_t n = 0; n < u_len; ++n) ps.nums.push_back(d.point(BigUint{n}, 16).num);
    auto outcome = disc::schmidt_witness(ps, m_len);
    REQUIRE(std::holds_alternative<disc::Witness>(outcome));
    const auto& w = std::get<disc::Witness>(outcome);
    CHECK(w.n <= u_len);
    CHECK(w.defect >= rat(static_cast<std::int64_t>(l), 4));
    // re-verify the defect through count_in
    Rational lam{BigInt{w.j.hi} - BigInt{w.j.lo}, BigUint::pow2(w.j.resolution)};
    Rational recount =
        (Rational{BigInt{BigUint{disc::count_in(ps, w.j, w.n)}}} - Rational{BigInt{BigUint{w.n}}} * lam)
            .abs();
    CHECK(recount == w.defect);
}

TEST_CASE("schmidt witness on degenerate and low-discrepancy controls") {
    // all mass at zero: the pigeonhole dichotomy certifies a defect quickly
    PointSet zeros;
    zeros.precision = 16;
    for (int i = 0; i < 5000; ++i) zeros.nums.emplace_back(0);
    auto outcome = disc::schmidt_witness(zeros, 4096);
    CHECK((std::holds_alternative<disc::Witness>(outcome) ||
           std::holds_alternative<disc::AssumptionViolated>(outcome)));

    // van der Corput control: certified outcome either way
    PointSet vdc;
    vdc.precision = 14;
    for (std::uint64_t n = 0; n < 4103; ++n) {
        BigUint num;
        for (unsigned j = 0; j < 14; ++j)
            if ((n >> j) & 1u) num.set_bit(13 - j);
        vdc.nums.push_back(std::move(num));
    }
    auto vdc_outcome = disc::schmidt_witness(vdc, 4096);
    if (std::holds_alternative<disc::AssumptionViolated>(vdc_outcome)) {
        const auto& v = std::get<disc::AssumptionViolated>(vdc_outcome);
        CHECK(v.n_times_d.to_double() > v.log_n);
        // the reported N*D_N is reproducible through the engine
        PointSet head;
        head.precision = vdc.precision;
        head.nums.assign(vdc.nums.begin(), vdc.nums.begin() + static_cast<std::ptrdiff_t>(v.n));
        CHECK(disc::extreme_discrepancy(head) * Rational{BigInt{BigUint{v.n}}} == v.n_times_d);
    }
}
