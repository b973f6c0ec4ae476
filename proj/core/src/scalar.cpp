#include "romik/scalar.hpp"

#include "romik/errors.hpp"

#include <ostream>

namespace romik {

namespace {

// Field element r0 + r1*sqrt(d); d == 0 marks a plain rational.
struct Coords {
    Rational r0, r1;
    Integer d;
};

Coords coords(const Scalar& x) {
    if (x.is_rational()) return {x.rational(), Rational{}, Integer(0)};
    const QuadSurd& s = x.surd();
    return {s.rational_part(), s.radical_coeff(), s.d()};
}

Integer common_radicand(const Coords& x, const Coords& y) {
    if (x.d == 0) return y.d;
    if (y.d == 0 || x.d == y.d) return x.d;
    throw MixedDiscriminant("sqrt(" + x.d.get_str() + ") and sqrt(" + y.d.get_str() + ")");
}

Scalar from_coords(const Rational& r0, const Rational& r1, const Integer& d) {
    if (d == 0 || r1.is_zero()) return Scalar(r0);
    Integer c;
    mpz_lcm(c.get_mpz_t(), r0.den().get_mpz_t(), r1.den().get_mpz_t());
    Integer a = r0.num() * (c / r0.den());
    Integer e = r1.num() * (c / r1.den());
    return make_surd_squarefree(std::move(a), std::move(e), d, std::move(c));
}

// Sign of r0 + r1*sqrt(d) by comparing squares; no rounding involved.
int coords_sign(const Rational& r0, const Rational& r1, const Integer& d) {
    const int s0 = r0.sign(), s1 = r1.sign();
    if (s1 == 0 || d == 0) return s0;
    if (s0 == 0 || s0 == s1) return s1;
    const Rational lhs = r0 * r0, rhs = r1 * r1 * Rational(d);
    return lhs > rhs ? s0 : s1;
}

}  // namespace

std::optional<Integer> Scalar::radicand() const {
    if (is_rational()) return std::nullopt;
    return surd().d();
}

Rational Scalar::rational_part() const {
    return is_rational() ? rational() : surd().rational_part();
}

Rational Scalar::radical_coeff() const {
    return is_rational() ? Rational{} : surd().radical_coeff();
}

int Scalar::sign() const {
    const Coords c = coords(*this);
    return coords_sign(c.r0, c.r1, c.d);
}

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(-rational());
    const QuadSurd& s = surd();
    return make_surd_squarefree(-s.a(), -s.e(), s.d(), s.c());
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    const Coords a = coords(x), b = coords(y);
    const Integer d = common_radicand(a, b);
    return from_coords(a.r0 + b.r0, a.r1 + b.r1, d);
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x, const Scalar& y) {
    const Coords a = coords(x), b = coords(y);
    const Integer d = common_radicand(a, b);
    if (d == 0) return Scalar(a.r0 * b.r0);
    return from_coords(a.r0 * b.r0 + a.r1 * b.r1 * Rational(d), a.r0 * b.r1 + a.r1 * b.r0, d);
}

Scalar operator/(const Scalar& x, const Scalar& y) {
    if (y.is_zero()) throw ZeroDenominator("division by zero scalar");
    if (y.is_rational()) {
        const Coords a = coords(x);
        return from_coords(a.r0 / y.rational(), a.r1 / y.rational(), a.d);
    }
    const Coords b = coords(y);
    // 1/(r0 + r1 sqrt d) = (r0 - r1 sqrt d) / (r0^2 - r1^2 d); the norm is nonzero for non-square d.
    const Rational norm = b.r0 * b.r0 - b.r1 * b.r1 * Rational(b.d);
    const Scalar inv = from_coords(b.r0 / norm, -b.r1 / norm, b.d);
    return x * inv;
}

std::strong_ordering compare(const Scalar& x, const Scalar& y) {
    const Coords a = coords(x), b = coords(y);
    const Integer d = common_radicand(a, b);
    const int s = coords_sign(a.r0 - b.r0, a.r1 - b.r1, d);
    return s < 0 ? std::strong_ordering::less
         : s > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) { return compare(x, y); }

Integer floor(const Scalar& x) {
    if (x.is_rational()) return floor(x.rational());
    const QuadSurd& s = x.surd();
    // e*sqrt(d) lies strictly inside (lo - a, lo - a + 1) with lo below.
    const Integer root = isqrt(s.e() * s.e() * s.d());
    const Integer lo = s.e() > 0 ? Integer(s.a() + root) : Integer(s.a() - root - 1);
    Integer k = floor_div(lo + 1, s.c());
    if (compare(x, Scalar(Rational(k))) < 0) k -= 1;
    return k;
}

std::string Scalar::str() const { return is_rational() ? rational().str() : surd().str(); }

long double Scalar::to_long_double() const {
    return is_rational() ? rational().to_long_double() : surd().to_long_double();
}

std::size_t ScalarHash::operator()(const Scalar& s) const noexcept {
    if (s.is_rational()) return hash_value(s.rational().num()) * 31u + hash_value(s.rational().den());
    return QuadSurdHash{}(s.surd());
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace romik
