#include "levnum/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace levnum {

namespace {
using u64 = std::uint64_t;
using u128 = unsigned __int128;
}  // namespace

BigUint::BigUint(u64 v) {
    if (v != 0) limbs_.push_back(v);
}

BigUint BigUint::pow2(std::size_t k) {
    BigUint r;
    r.set_bit(k);
    return r;
}

BigUint BigUint::from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigUint: empty decimal string");
    BigUint r;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("BigUint: bad decimal digit");
        // r = r*10 + digit
        u64 carry = static_cast<u64>(c - '0');
        for (auto& limb : r.limbs_) {
            u128 t = static_cast<u128>(limb) * 10 + carry;
            limb = static_cast<u64>(t);
            carry = static_cast<u64>(t >> 64);
        }
        if (carry != 0) r.limbs_.push_back(carry);
    }
    return r;
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    return 64 * (limbs_.size() - 1) + (64 - static_cast<std::size_t>(std::countl_zero(limbs_.back())));
}

bool BigUint::bit(std::size_t i) const {
    std::size_t w = i / 64;
    if (w >= limbs_.size()) return false;
    return (limbs_[w] >> (i % 64)) & 1u;
}

void BigUint::set_bit(std::size_t i) {
    std::size_t w = i / 64;
    if (w >= limbs_.size()) limbs_.resize(w + 1, 0);
    limbs_[w] |= u64{1} << (i % 64);
}

std::size_t BigUint::trailing_zero_bits() const {
    if (limbs_.empty()) return 0;
    std::size_t i = 0;
    while (limbs_[i] == 0) ++i;
    return 64 * i + static_cast<std::size_t>(std::countr_zero(limbs_[i]));
}

bool BigUint::is_pow2() const {
    if (limbs_.empty()) return false;
    return bit_length() == trailing_zero_bits() + 1;
}

u64 BigUint::to_u64() const {
    if (limbs_.size() > 1) throw std::overflow_error("BigUint: value exceeds 64 bits");
    return limbs_.empty() ? 0 : limbs_[0];
}

double BigUint::to_double() const {
    double r = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;) r = r * 18446744073709551616.0 + static_cast<double>(limbs_[i]);
    return r;
}

double BigUint::log2() const {
    if (limbs_.empty()) throw std::domain_error("BigUint: log2 of zero");
    std::size_t bl = bit_length();
    // top (up to) 64 bits as a mantissa
    std::size_t shift = bl > 64 ? bl - 64 : 0;
    BigUint top = *this >> shift;
    return static_cast<double>(shift) + std::log2(top.to_double());
}

std::string BigUint::to_decimal() const {
    if (limbs_.empty()) return "0";
    BigUint t = *this;
    std::string out;
    while (!t.is_zero()) {
        u64 rem = t.divmod_small(10000000000000000000ull);  // 10^19
        std::string chunk = std::to_string(rem);
        if (t.is_zero()) {
            out.insert(0, chunk);
        } else {
            out.insert(0, std::string(19 - chunk.size(), '0') + chunk);
        }
    }
    return out;
}

BigUint& BigUint::operator+=(const BigUint& o) {
    if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u128 t = static_cast<u128>(limbs_[i]) + (i < o.limbs_.size() ? o.limbs_[i] : 0) + carry;
        limbs_[i] = static_cast<u64>(t);
        carry = static_cast<u64>(t >> 64);
        if (carry == 0 && i >= o.limbs_.size()) break;
    }
    if (carry != 0) limbs_.push_back(carry);
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& o) {
    if (*this < o) throw std::underflow_error("BigUint: subtraction underflow");
    u64 borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u64 rhs = i < o.limbs_.size() ? o.limbs_[i] : 0;
        u64 lhs = limbs_[i];
        u64 res = lhs - rhs - borrow;
        borrow = (lhs < rhs || (lhs == rhs && borrow)) ? 1 : 0;
        limbs_[i] = res;
        if (borrow == 0 && i >= o.limbs_.size()) break;
    }
    trim();
    return *this;
}

BigUint& BigUint::operator<<=(std::size_t k) {
    if (limbs_.empty() || k == 0) return *this;
    std::size_t words = k / 64, bits = k % 64;
    std::size_t old = limbs_.size();
    limbs_.resize(old + words + (bits ? 1 : 0), 0);
    for (std::size_t i = old; i-- > 0;) {
        u64 v = limbs_[i];
        limbs_[i] = 0;
        if (bits == 0) {
            limbs_[i + words] = v;
        } else {
            limbs_[i + words + 1] |= v >> (64 - bits);
            limbs_[i + words] |= v << bits;
        }
    }
    trim();
    return *this;
}

BigUint& BigUint::operator>>=(std::size_t k) {
    if (limbs_.empty() || k == 0) return *this;
    std::size_t words = k / 64, bits = k % 64;
    if (words >= limbs_.size()) {
        limbs_.clear();
        return *this;
    }
    for (std::size_t i = 0; i + words < limbs_.size(); ++i) {
        u64 v = limbs_[i + words] >> bits;
        if (bits != 0 && i + words + 1 < limbs_.size()) v |= limbs_[i + words + 1] << (64 - bits);
        limbs_[i] = v;
    }
    limbs_.resize(limbs_.size() - words);
    trim();
    return *this;
}

BigUint BigUint::operator*(const BigUint& o) const {
    if (is_zero() || o.is_zero()) return BigUint{};
    // shift fast path: powers of two are ubiquitous here
    if (o.is_pow2()) return *this << o.trailing_zero_bits();
    if (is_pow2()) return o << trailing_zero_bits();
    BigUint r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u64 carry = 0;
        u64 a = limbs_[i];
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
            u128 t = static_cast<u128>(a) * o.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<u64>(t);
            carry = static_cast<u64>(t >> 64);
        }
        std::size_t pos = i + o.limbs_.size();
        while (carry != 0) {
            u128 t = static_cast<u128>(r.limbs_[pos]) + carry;
            r.limbs_[pos] = static_cast<u64>(t);
            carry = static_cast<u64>(t >> 64);
            ++pos;
        }
    }
    r.trim();
    return r;
}

u64 BigUint::divmod_small(u64 d) {
    if (d == 0) throw std::domain_error("BigUint: division by zero");
    u128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        u128 cur = (rem << 64) | limbs_[i];
        limbs_[i] = static_cast<u64>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<u64>(rem);
}

u64 BigUint::mod_small(u64 d) const {
    if (d == 0) throw std::domain_error("BigUint: division by zero");
    u128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) rem = ((rem << 64) | limbs_[i]) % d;
    return static_cast<u64>(rem);
}

BigUint BigUint::divmod(const BigUint& a, const BigUint& b, BigUint& rem) {
    if (b.is_zero()) throw std::domain_error("BigUint: division by zero");
    if (b.is_pow2()) {
        std::size_t k = b.trailing_zero_bits();
        rem = a;
        BigUint q = a >> k;
        rem -= q << k;
        return q;
    }
    if (b.fits_u64()) {
        BigUint q = a;
        rem = BigUint{q.divmod_small(b.to_u64())};
        return q;
    }
    BigUint q;
    rem = BigUint{};
    for (std::size_t i = a.bit_length(); i-- > 0;) {
        rem <<= 1;
        if (a.bit(i)) rem.set_bit(0);
        if (rem >= b) {
            rem -= b;
            q.set_bit(i);
        }
    }
    return q;
}

std::strong_ordering BigUint::operator<=>(const BigUint& o) const {
    if (limbs_.size() != o.limbs_.size()) return limbs_.size() <=> o.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
    }
    return std::strong_ordering::equal;
}

BigUint gcd(BigUint a, BigUint b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // pure powers of two and single-limb values cover every denominator in
    // this code base; the binary loop below is the general fallback
    if (a.is_pow2() || b.is_pow2()) {
        std::size_t k = std::min(a.trailing_zero_bits(), b.trailing_zero_bits());
        return BigUint::pow2(k);
    }
    if (b.fits_u64() || a.fits_u64()) {
        if (!b.fits_u64()) std::swap(a, b);
        u64 x = a.mod_small(b.to_u64());
        u64 y = b.to_u64();
        while (x != 0) {
            u64 t = y % x;
            y = x;
            x = t;
        }
        return BigUint{y};
    }
    std::size_t shift = std::min(a.trailing_zero_bits(), b.trailing_zero_bits());
    a >>= a.trailing_zero_bits();
    b >>= b.trailing_zero_bits();
    while (a != b) {
        if (a > b) {
            a -= b;
            a >>= a.trailing_zero_bits();
        } else {
            b -= a;
            b >>= b.trailing_zero_bits();
        }
    }
    return a << shift;
}

BigInt::BigInt(std::int64_t v) {
    if (v < 0) {
        neg_ = true;
        mag_ = BigUint{static_cast<u64>(-(v + 1)) + 1};
    } else {
        mag_ = BigUint{static_cast<u64>(v)};
    }
}

BigInt::BigInt(BigUint mag, bool negative) : mag_(std::move(mag)), neg_(negative && !mag_.is_zero()) {}

BigInt BigInt::from_decimal(std::string_view s) {
    if (!s.empty() && s.front() == '-') return BigInt{BigUint::from_decimal(s.substr(1)), true};
    return BigInt{BigUint::from_decimal(s)};
}

BigInt BigInt::operator-() const { return BigInt{mag_, !neg_}; }

BigInt BigInt::operator+(const BigInt& o) const {
    if (neg_ == o.neg_) return BigInt{mag_ + o.mag_, neg_};
    if (mag_ >= o.mag_) return BigInt{mag_ - o.mag_, neg_};
    return BigInt{o.mag_ - mag_, o.neg_};
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const { return BigInt{mag_ * o.mag_, neg_ != o.neg_}; }

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
    if (neg_ != o.neg_) return neg_ ? std::strong_ordering::less : std::strong_ordering::greater;
    auto cmp = mag_ <=> o.mag_;
    if (!neg_) return cmp;
    if (cmp == std::strong_ordering::less) return std::strong_ordering::greater;
    if (cmp == std::strong_ordering::greater) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

bool BigInt::operator==(const BigInt& o) const { return neg_ == o.neg_ && mag_ == o.mag_; }

double BigInt::to_double() const { return neg_ ? -mag_.to_double() : mag_.to_double(); }

std::string BigInt::to_decimal() const { return neg_ ? "-" + mag_.to_decimal() : mag_.to_decimal(); }

}  // namespace levnum
