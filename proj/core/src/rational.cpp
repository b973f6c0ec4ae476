#include "romik/rational.hpp"

#include "romik/errors.hpp"

#include <cmath>
#include <functional>
#include <ostream>

namespace romik {

std::size_t hash_value(const Integer& n) noexcept {
    const mpz_srcptr z = n.get_mpz_t();
    std::size_t h = std::hash<int>{}(z->_mp_size);
    const int limbs = z->_mp_size < 0 ? -z->_mp_size : z->_mp_size;
    for (int i = 0; i < limbs; ++i) {
        h ^= std::hash<mp_limb_t>{}(z->_mp_d[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ZeroDenominator("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::from_mpq(const mpq_class& q) {
    Rational r;
    r.value_ = q;
    r.value_.canonicalize();
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ZeroDenominator("division by zero rational");
    value_ /= o.value_;
    return *this;
}

std::string Rational::str() const { return num().get_str() + "/" + den().get_str(); }

std::string Rational::pretty() const {
    return is_integer() ? num().get_str() : str();
}

namespace {

// log|n| for big integers without overflowing a double.
long double log_abs(const Integer& n) {
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return std::log(static_cast<long double>(std::fabs(mant))) +
           static_cast<long double>(exp) * std::log(2.0L);
}

}  // namespace

long double Rational::to_long_double() const {
    long en = 0, ed = 0;
    const double mn = mpz_get_d_2exp(&en, num().get_mpz_t());
    const double md = mpz_get_d_2exp(&ed, den().get_mpz_t());
    return std::ldexp(static_cast<long double>(mn) / md, static_cast<int>(en - ed));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational reciprocal(const Rational& r) { return Rational(1) / r; }

Integer floor(const Rational& r) { return floor_div(r.num(), r.den()); }

long double log(const Rational& r) {
    if (r.sign() <= 0) throw OutOfDomain("log of non-positive rational " + r.str());
    return log_abs(r.num()) - log_abs(r.den());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace romik
