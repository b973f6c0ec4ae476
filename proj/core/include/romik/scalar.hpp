#pragma once

#include "romik/quad_surd.hpp"
#include "romik/rational.hpp"

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

namespace romik {

/// An exact real: either a Rational or a canonical QuadSurd. Immutable value
/// type; arithmetic between surds of different radicands is rejected with
/// MixedDiscriminant.
class Scalar {
public:
    Scalar() : value_(Rational{}) {}
    Scalar(long v) : value_(Rational(v)) {}                 // NOLINT
    Scalar(Rational r) : value_(std::move(r)) {}            // NOLINT
    Scalar(QuadSurd s) : value_(std::move(s)) {}            // NOLINT

    bool is_rational() const { return std::holds_alternative<Rational>(value_); }
    bool is_surd() const { return !is_rational(); }

    /// Throws std::bad_variant_access on the wrong alternative.
    const Rational& rational() const { return std::get<Rational>(value_); }
    const QuadSurd& surd() const { return std::get<QuadSurd>(value_); }
    const std::variant<Rational, QuadSurd>& variant() const { return value_; }

    /// Radicand d for surds, nullopt for rationals.
    std::optional<Integer> radicand() const;

    /// Coordinates (r0, r1) with value r0 + r1*sqrt(d); r1 = 0 for rationals.
    Rational rational_part() const;
    Rational radical_coeff() const;

    int sign() const;
    bool is_zero() const { return is_rational() && rational().is_zero(); }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    /// Throws ZeroDenominator on division by zero.
    friend Scalar operator/(const Scalar& x, const Scalar& y);

    friend bool operator==(const Scalar&, const Scalar&) = default;
    friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

    /// Rationals as "p/q", surds as "(a+e*sqrt(d))/c".
    std::string str() const;
    long double to_long_double() const;

private:
    std::variant<Rational, QuadSurd> value_;
};

/// Canonical form of (a + e*sqrt(d0)) / c: pulls square factors of d0 into e,
/// reduces by gcd(a, e, c), makes c > 0. Returns a Rational when e == 0, d0 == 0
/// or d0 is a perfect square. Throws ZeroDenominator (c == 0) or OutOfDomain
/// (d0 < 0).
Scalar surd_canonicalize(Integer a, Integer e, Integer d0, Integer c);

/// Same, with d already known to be square-free (skips factoring).
Scalar make_surd_squarefree(Integer a, Integer e, const Integer& d, Integer c);

/// Exact three-way comparison by sign analysis; no floating point.
std::strong_ordering compare(const Scalar& x, const Scalar& y);

Integer floor(const Scalar& x);

struct ScalarHash {
    std::size_t operator()(const Scalar& s) const noexcept;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace romik
