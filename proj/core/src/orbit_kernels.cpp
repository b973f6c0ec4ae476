#include "romik/orbit_kernels.hpp"

#include "romik/errors.hpp"

#include <mpfr.h>

#include <cmath>

namespace romik {

namespace {

// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2, about 106 significand bits.
struct DD {
    double hi = 0, lo = 0;
};

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DD operator+(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    DD t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD operator-(DD a) { return {-a.hi, -a.lo}; }
inline DD operator-(DD a, DD b) { return a + (-b); }

inline DD mul(DD a, double b) {
    const double p = a.hi * b;
    const double e = std::fma(a.hi, b, -p);
    return quick_two_sum(p, e + a.lo * b);
}

inline DD operator*(DD a, DD b) {
    const double p = a.hi * b.hi;
    const double e = std::fma(a.hi, b.hi, -p) + (a.hi * b.lo + a.lo * b.hi);
    return quick_two_sum(p, e);
}

inline DD operator/(DD a, DD b) {
    const double q1 = a.hi / b.hi;
    DD r = a - mul(b, q1);
    const double q2 = r.hi / b.hi;
    r = r - mul(b, q2);
    const double q3 = r.hi / b.hi;
    return quick_two_sum(q1, q2) + DD{q3, 0};
}

inline bool operator<(DD a, DD b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator==(DD a, DD b) { return a.hi == b.hi && a.lo == b.lo; }

// Nearest representation of a rational as a sum of three doubles.
struct Split {
    double h, m, l;
};

Split split(const Rational& r) {
    mpq_class rest = r.mpq();
    Split s{};
    s.h = rest.get_d();
    rest -= s.h;
    s.m = rest.get_d();
    rest -= s.m;
    s.l = rest.get_d();
    return s;
}

template <class Real>
Real from_rational(const Rational& r);

template <>
long double from_rational<long double>(const Rational& r) {
    const Split s = split(r);
    return static_cast<long double>(s.h) + static_cast<long double>(s.m);
}

template <>
DD from_rational<DD>(const Rational& r) {
    const Split s = split(r);
    return two_sum(s.h, s.m) + DD{s.l, 0};
}

template <>
__float128 from_rational<__float128>(const Rational& r) {
    const Split s = split(r);
    return static_cast<__float128>(s.h) + static_cast<__float128>(s.m) + static_cast<__float128>(s.l);
}

template <class Real>
Real lit(double v) {
    if constexpr (std::is_same_v<Real, DD>) return DD{v, 0};
    else return static_cast<Real>(v);
}

template <class Real>
OrbitCounts run(const Rational& x0, std::uint64_t n, const OpenInterval& f, const OpenInterval& g) {
    Real x = from_rational<Real>(x0);
    const Real third = from_rational<Real>(Rational(1, 3));
    const Real half = lit<Real>(0.5), one = lit<Real>(1), two = lit<Real>(2);
    const Real zero = lit<Real>(0);
    const Real fl = from_rational<Real>(f.lo), fh = from_rational<Real>(f.hi);
    const Real gl = from_rational<Real>(g.lo), gh = from_rational<Real>(g.hi);
    const bool f_on = !f.empty(), g_on = !g.empty();
    OrbitCounts c;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (f_on && fl < x && x < fh) ++c.f;
        if (g_on && gl < x && x < gh) ++c.g;
        if (i + 1 == n) break;
        if (x < third) x = x / (one - (x + x));
        else if (x < half) x = one / x - two;
        else x = two - one / x;
        if (x == zero || x == one)
            throw DegenerateOrbit("float orbit reached a fixed point after " + std::to_string(i + 1) + " steps");
    }
    return c;
}

class MpfrVar {
public:
    explicit MpfrVar(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~MpfrVar() { mpfr_clear(v_); }
    MpfrVar(const MpfrVar&) = delete;
    MpfrVar& operator=(const MpfrVar&) = delete;
    mpfr_ptr get() { return v_; }

private:
    mpfr_t v_;
};

OrbitCounts run_mpfr(const Rational& x0, std::uint64_t n, const OpenInterval& f, const OpenInterval& g,
                     int bits) {
    const auto prec = static_cast<mpfr_prec_t>(bits);
    MpfrVar x(prec), t(prec), third(prec), fl(prec), fh(prec), gl(prec), gh(prec);
    auto set = [](MpfrVar& v, const Rational& r) { mpfr_set_q(v.get(), r.mpq().get_mpq_t(), MPFR_RNDN); };
    set(x, x0);
    set(third, Rational(1, 3));
    set(fl, f.lo);
    set(fh, f.hi);
    set(gl, g.lo);
    set(gh, g.hi);
    const bool f_on = !f.empty(), g_on = !g.empty();
    OrbitCounts c;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (f_on && mpfr_less_p(fl.get(), x.get()) && mpfr_less_p(x.get(), fh.get())) ++c.f;
        if (g_on && mpfr_less_p(gl.get(), x.get()) && mpfr_less_p(x.get(), gh.get())) ++c.g;
        if (i + 1 == n) break;
        if (mpfr_less_p(x.get(), third.get())) {
            mpfr_mul_2ui(t.get(), x.get(), 1, MPFR_RNDN);
            mpfr_ui_sub(t.get(), 1, t.get(), MPFR_RNDN);
            mpfr_div(x.get(), x.get(), t.get(), MPFR_RNDN);
        } else if (mpfr_cmp_d(x.get(), 0.5) < 0) {
            mpfr_ui_div(x.get(), 1, x.get(), MPFR_RNDN);
            mpfr_sub_ui(x.get(), x.get(), 2, MPFR_RNDN);
        } else {
            mpfr_ui_div(x.get(), 1, x.get(), MPFR_RNDN);
            mpfr_ui_sub(x.get(), 2, x.get(), MPFR_RNDN);
        }
        if (mpfr_zero_p(x.get()) || mpfr_cmp_ui(x.get(), 1) == 0)
            throw DegenerateOrbit("float orbit reached a fixed point after " + std::to_string(i + 1) + " steps");
    }
    return c;
}

}  // namespace

FloatBackend backend_for_bits(int bits) {
    if (bits < 2) throw OutOfDomain("precision must be at least 2 bits");
    if (bits <= 64) return FloatBackend::LongDouble;
    if (bits <= 106) return FloatBackend::DoubleDouble;
    if (bits <= 113) return FloatBackend::Float128;
    return FloatBackend::Mpfr;
}

std::string_view to_string(FloatBackend b) {
    switch (b) {
        case FloatBackend::LongDouble: return "long-double";
        case FloatBackend::DoubleDouble: return "double-double";
        case FloatBackend::Float128: return "binary128";
        case FloatBackend::Mpfr: return "mpfr";
    }
    return "?";
}

OrbitCounts count_orbit_visits(const Rational& x0, std::uint64_t n, const OpenInterval& f,
                               const OpenInterval& g, int precision_bits) {
    switch (backend_for_bits(precision_bits)) {
        case FloatBackend::LongDouble: return run<long double>(x0, n, f, g);
        case FloatBackend::DoubleDouble: return run<DD>(x0, n, f, g);
        case FloatBackend::Float128: return run<__float128>(x0, n, f, g);
        case FloatBackend::Mpfr: return run_mpfr(x0, n, f, g, precision_bits);
    }
    return {};
}

}  // namespace romik
