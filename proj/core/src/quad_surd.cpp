#include "romik/quad_surd.hpp"

#include "romik/errors.hpp"
#include "romik/scalar.hpp"

#include <gmpxx.h>

namespace romik {

std::pair<Integer, Integer> squarefree_decompose(const Integer& n) {
    if (n < 1) throw OutOfDomain("square-free decomposition of " + n.get_str());
    Integer f = 1, kernel = 1, m = n;
    // Remove p completely, splitting p^k into p^(2*(k/2)) for f and p^(k%2) for the kernel.
    auto strip = [&](const Integer& p) {
        unsigned long k = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++k;
        }
        for (unsigned long i = 0; i < k / 2; ++i) f *= p;
        if (k % 2) kernel *= p;
    };
    strip(2);
    // Once p^3 > m, every remaining prime factor exceeds p, so m is 1, q, q*r or q^2.
    for (Integer p = 3; p * p * p <= m; p += 2) strip(p);
    if (m > 1 && is_perfect_square(m)) f *= isqrt(m);
    else kernel *= m;
    return {f, kernel};
}

std::string QuadSurd::str() const {
    std::string s = "(" + a_.get_str();
    s += e_ < 0 ? "-" : "+";
    const Integer ae = abs(e_);
    if (ae != 1) s += ae.get_str() + "*";
    s += "sqrt(" + d_.get_str() + "))/" + c_.get_str();
    return s;
}

long double QuadSurd::to_long_double() const {
    mpf_class v(0, 256), r(d_, 256);
    r = sqrt(r);
    v = (mpf_class(a_, 256) + mpf_class(e_, 256) * r) / mpf_class(c_, 256);
    const double hi = v.get_d();
    mpf_class rest(v - hi, 256);
    return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

std::size_t QuadSurdHash::operator()(const QuadSurd& s) const noexcept {
    std::size_t h = hash_value(s.a());
    for (const Integer* z : {&s.e(), &s.d(), &s.c()})
        h ^= hash_value(*z) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

Scalar make_surd_squarefree(Integer a, Integer e, const Integer& d, Integer c) {
    if (c == 0) throw ZeroDenominator("surd with zero denominator");
    if (e == 0 || d == 0) return Scalar(Rational(a, c));
    if (d == 1) return Scalar(Rational(a + e, c));
    Integer g = gcd(gcd(a, e), c);
    if (c < 0) g = -g;
    if (g != 1) {
        a /= g;
        e /= g;
        c /= g;
    }
    return Scalar(QuadSurd(std::move(a), std::move(e), d, std::move(c)));
}

Scalar surd_canonicalize(Integer a, Integer e, Integer d0, Integer c) {
    if (c == 0) throw ZeroDenominator("surd with zero denominator");
    if (d0 < 0) throw OutOfDomain("negative radicand " + d0.get_str());
    if (e == 0 || d0 == 0) return Scalar(Rational(a, c));
    auto [f, d] = squarefree_decompose(d0);
    return make_surd_squarefree(std::move(a), e * f, d, std::move(c));
}

}  // namespace romik
