#pragma once

#include <compare>
#include <string>

#include "levnum/bigint.hpp"

namespace levnum {

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInt num, BigUint den);
    explicit Rational(BigInt num) : num_(std::move(num)), den_(1) {}

    /// num / 2^k
    static Rational dyadic(BigInt num, std::size_t k) { return Rational{std::move(num), BigUint::pow2(k)}; }

    const BigInt& num() const { return num_; }
    const BigUint& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigUint{1}; }
    bool is_negative() const { return num_.negative(); }

    Rational operator-() const { return Rational{-num_, den_, nullptr}; }
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const { return *this + (-o); }
    Rational operator*(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    std::strong_ordering operator<=>(const Rational& o) const;
    bool operator==(const Rational& o) const;

    Rational abs() const { return num_.negative() ? -*this : *this; }
    double to_double() const;
    /// "p/q", or just "p" for integers.
    std::string to_string() const;
    /// "p/2^k" when the denominator is a power of two, else to_string().
    std::string to_compact_string() const;

  private:
    Rational(BigInt num, BigUint den, std::nullptr_t) : num_(std::move(num)), den_(std::move(den)) {}
    BigInt num_;
    BigUint den_;
};

}  // namespace levnum
