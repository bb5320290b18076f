#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Unbounded non-negative integers on 64-bit limbs, plus a signed wrapper.
// Block offsets like n_m overflow 64 bits already at m = 7, and the
// native-scale ledgers manipulate numbers of a few hundred kilobits, so the
// representation has no size cap. Multiplication is schoolbook; every
// product in this code base has at least one small factor.

namespace levnum {

class BigUint {
  public:
    BigUint() = default;
    BigUint(std::uint64_t v);  // NOLINT(google-explicit-constructor)

    static BigUint pow2(std::size_t k);
    static BigUint from_decimal(std::string_view s);

    bool is_zero() const { return limbs_.empty(); }
    /// Number of significant bits; 0 for zero.
    std::size_t bit_length() const;
    bool bit(std::size_t i) const;
    void set_bit(std::size_t i);
    /// Exponent of the largest power of two dividing *this; 0 for zero.
    std::size_t trailing_zero_bits() const;
    bool is_pow2() const;

    bool fits_u64() const { return limbs_.size() <= 1; }
    std::uint64_t to_u64() const;  // throws if it does not fit
    double to_double() const;
    /// log2 of the value as a double; requires nonzero.
    double log2() const;
    std::string to_decimal() const;

    BigUint& operator+=(const BigUint& o);
    BigUint& operator-=(const BigUint& o);  // requires *this >= o
    BigUint& operator<<=(std::size_t k);
    BigUint& operator>>=(std::size_t k);
    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
    friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }
    friend BigUint operator<<(BigUint a, std::size_t k) { return a <<= k; }
    friend BigUint operator>>(BigUint a, std::size_t k) { return a >>= k; }
    BigUint operator*(const BigUint& o) const;
    BigUint& operator*=(const BigUint& o) { return *this = *this * o; }

    /// In-place division by a nonzero single limb; returns the remainder.
    std::uint64_t divmod_small(std::uint64_t d);
    std::uint64_t mod_small(std::uint64_t d) const;
    /// Long division; rem receives the remainder. Shift-subtract, only used
    /// off the hot paths.
    static BigUint divmod(const BigUint& a, const BigUint& b, BigUint& rem);

    std::strong_ordering operator<=>(const BigUint& o) const;
    bool operator==(const BigUint& o) const = default;

    const std::vector<std::uint64_t>& limbs() const { return limbs_; }

  private:
    void trim();
    std::vector<std::uint64_t> limbs_;  // little endian, no trailing zero limbs
};

BigUint gcd(BigUint a, BigUint b);

class BigInt {
  public:
    BigInt() = default;
    BigInt(std::int64_t v);  // NOLINT(google-explicit-constructor)
    BigInt(BigUint mag, bool negative = false);

    static BigInt from_decimal(std::string_view s);

    bool is_zero() const { return mag_.is_zero(); }
    bool negative() const { return neg_; }
    const BigUint& magnitude() const { return mag_; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    std::strong_ordering operator<=>(const BigInt& o) const;
    bool operator==(const BigInt& o) const;

    double to_double() const;
    std::string to_decimal() const;

  private:
    BigUint mag_;
    bool neg_ = false;  // never set when mag_ is zero
};

}  // namespace levnum
