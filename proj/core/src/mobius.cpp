#include "romik/mobius.hpp"

#include "romik/errors.hpp"

#include <ostream>

namespace romik {

std::string Mobius::str() const {
    return "[[" + m11.get_str() + "," + m12.get_str() + "],[" + m21.get_str() + "," +
           m22.get_str() + "]]";
}

Scalar mobius_apply(const Mobius& m, const Scalar& x) {
    if (x.is_rational()) {
        const Rational& r = x.rational();
        const Integer num = m.m11 * r.num() + m.m12 * r.den();
        const Integer den = m.m21 * r.num() + m.m22 * r.den();
        if (den == 0) throw PoleError(m.str() + " at " + r.str());
        return Scalar(Rational(num, den));
    }
    const Scalar den = Scalar(Rational(m.m21)) * x + Scalar(Rational(m.m22));
    if (den.is_zero()) throw PoleError(m.str() + " at " + x.str());
    return (Scalar(Rational(m.m11)) * x + Scalar(Rational(m.m12))) / den;
}

std::ostream& operator<<(std::ostream& os, const Mobius& m) { return os << m.str(); }

}  // namespace romik
