#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "moran/integer.hpp"

namespace moran {

/// Exact rational, always in lowest terms with a positive denominator.
/// Zero is the unique 0/1. Equality and ordering are exact; hashing is
/// structural on the canonical form.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den);

    const Integer numerator() const { return v_.get_num(); }
    const Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational pow(unsigned long e) const;

    /// "-3/5", "7/1" -> "7", "0".
    std::string str() const;

    /// Accepts an optionally signed integer or integer/integer pair.
    static std::optional<Rational> parse(std::string_view text);

    std::size_t hash() const;

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

} // namespace moran
