#include "levnum/rational.hpp"

#include <stdexcept>
#include <utility>

namespace levnum {

Rational::Rational(BigInt num, BigUint den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (num_.is_zero()) {
        den_ = BigUint{1};
        return;
    }
    BigUint g = gcd(num_.magnitude(), den_);
    if (g != BigUint{1}) {
        BigUint m = num_.magnitude();
        if (g.is_pow2()) {
            std::size_t k = g.trailing_zero_bits();
            m >>= k;
            den_ >>= k;
        } else if (g.fits_u64()) {
            m.divmod_small(g.to_u64());
            den_.divmod_small(g.to_u64());
        } else {
            BigUint rem;
            m = BigUint::divmod(m, g, rem);
            den_ = BigUint::divmod(den_, g, rem);
        }
        num_ = BigInt{std::move(m), num_.negative()};
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational{num_ * BigInt{o.den_} + o.num_ * BigInt{den_}, den_ * o.den_};
}

Rational Rational::operator*(const Rational& o) const {
    return Rational{num_ * o.num_, den_ * o.den_};
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    return num_ * BigInt{o.den_} <=> o.num_ * BigInt{den_};
}

bool Rational::operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

double Rational::to_double() const {
    // scale so that both parts stay representable
    std::size_t nb = num_.magnitude().bit_length();
    std::size_t db = den_.bit_length();
    if (nb < 900 && db < 900) return num_.to_double() / den_.to_double();
    std::size_t drop_n = nb > 512 ? nb - 512 : 0;
    std::size_t drop_d = db > 512 ? db - 512 : 0;
    BigUint n = num_.magnitude() >> drop_n;
    BigUint d = den_ >> drop_d;
    double v = n.to_double() / d.to_double();
    if (drop_n >= drop_d) {
        for (std::size_t i = 0; i < drop_n - drop_d; ++i) v *= 2.0;
    } else {
        for (std::size_t i = 0; i < drop_d - drop_n; ++i) v *= 0.5;
    }
    return num_.negative() ? -v : v;
}

std::string Rational::to_string() const {
    if (is_integer()) return num_.to_decimal();
    return num_.to_decimal() + "/" + den_.to_decimal();
}

std::string Rational::to_compact_string() const {
    if (is_integer()) return num_.to_decimal();
    if (den_.is_pow2() && den_.bit_length() > 65) {
        return num_.to_decimal() + "/2^" + std::to_string(den_.trailing_zero_bits());
    }
    return to_string();
}

}  // namespace levnum
