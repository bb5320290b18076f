#include "levnum/levin_number.hpp"

#include <bit>

#include <stdexcept>
#include <string>

#include "levnum/errors.hpp"
#include "levnum/kernels.hpp"
#include "levnum/pascal.hpp"

namespace levnum::levin {

namespace {
using u64 = std::uint64_t;

constexpr int kHardBlockCap = 24;  // decompose gives up past this block

// bits [pos, pos+take) of a packed array, take <= 64
u64 extract_bits(const std::vector<u64>& words, std::size_t pos, int take) {
    std::size_t w = pos / 64, b = pos % 64;
    u64 v = words[w] >> b;
    if (b != 0 && w + 1 < words.size()) v |= words[w + 1] << (64 - b);
    if (take < 64) v &= (u64{1} << take) - 1;
    return v;
}

}  // namespace

BigUint block_start(int m) {
    if (m < 1 || m > kHardBlockCap + 1) throw std::invalid_argument("block_start: m out of range");
    BigUint total;
    for (int r = 1; r < m; ++r) total += BigUint::pow2(static_cast<std::size_t>(r) + (std::size_t{1} << r));
    return total;
}

BigUint block_digit_count(int m) {
    if (m < 1 || m > kHardBlockCap + 1) throw std::invalid_argument("block_digit_count: m out of range");
    return BigUint::pow2(static_cast<std::size_t>(m) + (std::size_t{1} << m));
}

Digits::Digits(int m_max) : m_max_(m_max) {
    if (m_max < 1 || m_max > 12) throw std::invalid_argument("Digits: m_max must be in [1, 12]");
    row_tables_.resize(static_cast<std::size_t>(m_max_) + 3);
    for (int m = 1; m <= m_max_ + 2; ++m) {
        std::size_t size = std::size_t{1} << m;
        std::size_t wpr = (size + 63) / 64;
        auto& table = row_tables_[static_cast<std::size_t>(m)];
        table.assign(size * wpr, 0);
        for (std::size_t k = 0; k < size; ++k)
            for (std::size_t j = 0; j < size; ++j)
                if (pascal::entry(k, j)) table[k * wpr + j / 64] |= u64{1} << (j % 64);
    }
    // bitmap of blocks 1..4; backs the prefix sweeps
    cache_bits_ = block_start(5).to_u64();
    cache_.assign((cache_bits_ + 63) / 64, 0);
    std::size_t pos = 0;
    for (int m = 1; m <= 4; ++m) {
        std::size_t size = std::size_t{1} << m;
        std::size_t wpr = (size + 63) / 64;
        const auto& table = row_tables_[static_cast<std::size_t>(m)];
        u64 n_count = u64{1} << (u64{1} << m);
        for (u64 n = 0; n < n_count; ++n) {
            for (std::size_t k = 0; k < size; ++k, ++pos) {
                if (kern::active().and_popcount(&table[k * wpr], &n, 1) & 1u)
                    cache_[pos / 64] |= u64{1} << (pos % 64);
            }
        }
    }
}

const std::vector<u64>& Digits::row_table(int m) const {
    if (m < 1 || m > m_max_ + 2)
        throw IndexBeyondRange("digit generation past block " + std::to_string(m_max_ + 2));
    return row_tables_[static_cast<std::size_t>(m)];
}

void Digits::generate_subblock(int m, const std::vector<u64>& n_words, std::vector<u64>& out) const {
    const auto& table = row_table(m);
    std::size_t size = std::size_t{1} << m;
    std::size_t wpr = (size + 63) / 64;
    out.assign(wpr, 0);
    if (wpr == 1) {
        u64 n = n_words[0];
        u64 bits = 0;
        for (std::size_t k = 0; k < size; ++k) {
            bits |= static_cast<u64>(std::popcount(table[k] & n) & 1) << k;
        }
        out[0] = bits;
        return;
    }
    const auto& kernel = kern::active();
    for (std::size_t k = 0; k < size; ++k) {
        if (kernel.and_popcount(&table[k * wpr], n_words.data(), wpr) & 1u)
            out[k / 64] |= u64{1} << (k % 64);
    }
}

IndexParts Digits::decompose(const BigUint& index1) {
    if (index1.is_zero()) throw IndexBeyondRange("decompose: positions are 1-based");
    int m = 1;
    BigUint start;  // n_m
    for (;;) {
        BigUint next = start + block_digit_count(m);  // n_{m+1}
        if (index1 <= next) break;
        start = std::move(next);
        ++m;
        if (m > kHardBlockCap) throw IndexBeyondRange("decompose: position beyond supported blocks");
    }
    BigUint offset = index1 - start - BigUint{1};
    IndexParts parts;
    parts.m = m;
    parts.k = static_cast<std::uint32_t>(offset.mod_small(u64{1} << m));
    parts.n = offset >> m;
    return parts;
}

int Digits::at(const BigUint& index1) const {
    if (index1.is_zero()) throw IndexBeyondRange("at: positions are 1-based");
    if (index1.fits_u64() && index1.to_u64() <= cache_bits_ && m_max_ >= 4) {
        std::size_t pos = index1.to_u64() - 1;
        return static_cast<int>((cache_[pos / 64] >> (pos % 64)) & 1u);
    }
    IndexParts parts = decompose(index1);
    if (parts.m > m_max_)
        throw IndexBeyondRange("at: block " + std::to_string(parts.m) + " beyond m_max " +
                               std::to_string(m_max_));
    std::size_t size = std::size_t{1} << parts.m;
    std::size_t wpr = (size + 63) / 64;
    std::vector<u64> n_words(parts.n.limbs());
    n_words.resize(wpr, 0);
    const auto& table = row_table(parts.m);
    return static_cast<int>(kern::active().and_popcount(&table[parts.k * wpr], n_words.data(), wpr) & 1u);
}

Digits::Stream::Stream(const Digits& d, BigUint pos1) : d_(&d) {
    if (pos1.is_zero()) throw IndexBeyondRange("stream: positions are 1-based");
    if (pos1.fits_u64() && pos1.to_u64() <= d.cache_bits_) {
        in_cache_ = true;
        cache_pos_ = pos1.to_u64() - 1;
        return;
    }
    IndexParts parts = decompose(pos1);
    m_ = parts.m;
    k_ = parts.k;
    std::size_t wpr = ((std::size_t{1} << m_) + 63) / 64;
    n_words_ = parts.n.limbs();
    n_words_.resize(wpr, 0);
    d_->generate_subblock(m_, n_words_, sub_);
}

// counter step with block crossing: when n wraps past 2^(2^m) the stream
// enters the next block at n = 0
void Digits::Stream::advance_counter() {
    bool carry = true;
    for (std::size_t i = 0; carry && i < n_words_.size(); ++i) carry = ++n_words_[i] == 0;
    std::size_t width = std::size_t{1} << m_;
    bool wrapped = width < 64 ? (n_words_[0] >> width) != 0 : carry;
    if (wrapped) {
        ++m_;
        n_words_.assign(((std::size_t{1} << m_) + 63) / 64, 0);
    }
}

void Digits::Stream::refill() {
    if (in_cache_) {
        if (cache_pos_ < d_->cache_bits_) {
            int take = static_cast<int>(std::min<std::size_t>(64, d_->cache_bits_ - cache_pos_));
            buf_ = extract_bits(d_->cache_, cache_pos_, take);
            buf_left_ = take;
            cache_pos_ += static_cast<std::size_t>(take);
            return;
        }
        // cache holds blocks 1..4 exactly, so generation resumes at block 5
        in_cache_ = false;
        m_ = 5;
        k_ = 0;
        n_words_.assign(1, 0);
        d_->generate_subblock(m_, n_words_, sub_);
    }
    if (k_ >= (std::size_t{1} << m_)) {
        k_ = 0;
        advance_counter();
        d_->generate_subblock(m_, n_words_, sub_);
    }
    std::size_t size = std::size_t{1} << m_;
    int take = static_cast<int>(std::min<std::size_t>(64, size - k_));
    buf_ = extract_bits(sub_, k_, take);
    buf_left_ = take;
    k_ += static_cast<std::uint32_t>(take);
}

int Digits::Stream::next() {
    if (buf_left_ == 0) refill();
    int bit = static_cast<int>(buf_ & 1u);
    buf_ >>= 1;
    --buf_left_;
    return bit;
}

DyadicFraction Digits::point(const BigUint& orbit_index, unsigned precision) const {
    if (precision == 0) throw std::invalid_argument("point: precision must be positive");
    IndexParts last = decompose(orbit_index + BigUint{precision});
    if (last.m > m_max_ + 1)
        throw IndexBeyondRange("point: window reaches block " + std::to_string(last.m) +
                               ", addressable limit is " + std::to_string(m_max_ + 1));
    Stream s(*this, orbit_index + BigUint{1});
    DyadicFraction f;
    f.precision = precision;
    for (unsigned j = 0; j < precision; ++j) {
        if (s.next()) f.num.set_bit(precision - 1 - j);
    }
    return f;
}

PointSet Digits::block_points(int m, u64 n_lo, u64 n_hi, std::uint32_t k_lo, std::uint32_t k_hi,
                              unsigned precision) const {
    if (m < 1 || m > m_max_ + 1) throw IndexBeyondRange("block_points: block out of addressable range");
    if (m < 6 && n_hi > (u64{1} << (u64{1} << m)))
        throw std::invalid_argument("block_points: n range exceeds the block");
    if (k_hi > (u64{1} << m)) throw std::invalid_argument("block_points: k range exceeds the sub-block");
    if (precision > (3u << m))
        throw std::invalid_argument("block_points: precision beyond one spill block");
    PointSet ps;
    ps.precision = precision;
    BigUint base = block_start(m);
    if (n_lo < n_hi && k_lo < k_hi) {
        ps.origin.start = base + (BigUint{n_lo} << static_cast<std::size_t>(m)) + BigUint{k_lo};
        for (u64 n = n_lo; n < n_hi; ++n) {
            BigUint row_base = base + (BigUint{n} << static_cast<std::size_t>(m));
            for (std::uint32_t k = k_lo; k < k_hi; ++k) {
                ps.nums.push_back(point(row_base + BigUint{k}, precision).num);
            }
        }
    }
    ps.origin.count = ps.nums.size();
    return ps;
}

int champernowne_digit(u64 index1) {
    if (index1 == 0) throw std::invalid_argument("champernowne_digit: positions are 1-based");
    // numbers with exactly b bits contribute b * 2^(b-1) digits
    u64 cum = 0;
    int b = 1;
    for (;; ++b) {
        u64 section = static_cast<u64>(b) << (b - 1);
        if (section > ~u64{0} - cum || index1 <= cum + section) break;
        cum += section;
    }
    u64 off = index1 - cum - 1;
    u64 q = off / static_cast<u64>(b);
    int r = static_cast<int>(off % static_cast<u64>(b));
    u64 number = (u64{1} << (b - 1)) + q;
    return static_cast<int>((number >> (b - 1 - r)) & 1u);
}

}  // namespace levnum::levin
