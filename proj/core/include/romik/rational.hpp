#pragma once

#include "romik/integer.hpp"

#include <compare>
#include <iosfwd>
#include <string>

namespace romik {

/// Exact reduced fraction num/den with den > 0.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const Integer& value) : value_(value) {}
    /// Throws ZeroDenominator when den == 0.
    Rational(const Integer& num, const Integer& den);

    static Rational from_mpq(const mpq_class& q);

    const Integer& num() const { return value_.get_num(); }
    const Integer& den() const { return value_.get_den(); }
    const mpq_class& mpq() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return den() == 1; }

    Rational operator-() const { return from_mpq(-value_); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// "p/q", always with the slash (the serialization form).
    std::string str() const;
    /// "p" for integers, "p/q" otherwise.
    std::string pretty() const;

    double to_double() const { return value_.get_d(); }
    long double to_long_double() const;

private:
    mpq_class value_;
};

Rational abs(const Rational& r);
Rational reciprocal(const Rational& r);
Integer floor(const Rational& r);

/// Natural logarithm of a positive rational; exact inputs of any size.
long double log(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace romik
