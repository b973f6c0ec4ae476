#include "romik/rcf.hpp"

#include "romik/errors.hpp"
#include "romik/mobius.hpp"

#include <algorithm>
#include <map>

namespace romik {

std::optional<std::size_t> RcfExpansion::length() const {
    if (period) return std::nullopt;
    return pre.size();
}

bool RcfExpansion::has_digit(std::size_t i) const {
    return i >= 1 && (period.has_value() || i <= pre.size());
}

const Integer& RcfExpansion::digit(std::size_t i) const {
    if (i == 0) throw OutOfDomain("partial quotients are indexed from 1");
    if (i <= pre.size()) return pre[i - 1];
    if (!period) throw NeedMoreDigits("expansion has only " + std::to_string(pre.size()) + " digits");
    return (*period)[(i - pre.size() - 1) % period->size()];
}

std::string RcfExpansion::str() const {
    std::string s = "[" + a0.get_str();
    if (!pre.empty() || period) s += ";";
    bool first = true;
    for (const Integer& a : pre) {
        if (!first) s += ",";
        s += a.get_str();
        first = false;
    }
    if (period) {
        if (!first) s += ",";
        s += "(";
        for (std::size_t i = 0; i < period->size(); ++i) {
            if (i) s += ",";
            s += (*period)[i].get_str();
        }
        s += ")";
    }
    return s + "]";
}

RcfExpansion rcf_normalize(RcfExpansion e) {
    if (!e.period) {
        if (!e.pre.empty() && e.pre.back() == 1) {
            e.pre.pop_back();
            if (e.pre.empty()) e.a0 += 1;
            else e.pre.back() += 1;
        }
        return e;
    }
    auto& per = *e.period;
    if (per.empty()) throw InvalidDigits("empty period");
    const std::size_t n = per.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p) continue;
        bool ok = true;
        for (std::size_t i = p; i < n && ok; ++i) ok = per[i] == per[i - p];
        if (ok) { per.resize(p); break; }
    }
    while (!e.pre.empty() && e.pre.back() == per.back()) {
        e.pre.pop_back();
        std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
    }
    return e;
}

RcfExpansion rcf_expand_rational(const Rational& x) {
    RcfExpansion e;
    Integer p = x.num(), q = x.den();
    e.a0 = floor_div(p, q);
    p -= e.a0 * q;
    while (p != 0) {
        // x = p/q in (0,1): next quotient is floor(q/p).
        Integer a = floor_div(q, p);
        Integer r = q - a * p;
        e.pre.push_back(std::move(a));
        q = p;
        p = r;
    }
    return e;
}

RcfExpansion rcf_expand_surd(const QuadSurd& x) {
    // Bring x to (P + sqrt(D))/Q with Q | D - P^2, then run the classical recursion.
    Integer P = x.a(), Q = x.c();
    Integer D = x.e() * x.e() * x.d();
    if (x.e() < 0) { P = -P; Q = -Q; }
    const Integer absQ = abs(Q);
    P *= absQ;
    D *= absQ * absQ;
    Q *= absQ;
    const Integer s = isqrt(D);

    auto next_digit = [&](const Integer& p, const Integer& q) {
        return q > 0 ? floor_div(p + s, q) : floor_div(p + s + 1, q);
    };

    RcfExpansion e;
    std::vector<Integer> digits;
    std::map<std::pair<Integer, Integer>, std::size_t> seen;
    for (std::size_t k = 0;; ++k) {
        if (k >= 1) {
            auto [it, fresh] = seen.emplace(std::make_pair(P, Q), k);
            if (!fresh) {
                const std::size_t start = it->second;
                e.a0 = digits[0];
                e.pre.assign(digits.begin() + 1, digits.begin() + static_cast<std::ptrdiff_t>(start));
                e.period.emplace(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end());
                return e;
            }
        }
        Integer a = next_digit(P, Q);
        const Integer Pn = a * Q - P;
        const Integer Qn = (D - Pn * Pn) / Q;
        digits.push_back(std::move(a));
        P = Pn;
        Q = Qn;
    }
}

RcfExpansion rcf_expand(const Scalar& x) {
    return x.is_rational() ? rcf_expand_rational(x.rational()) : rcf_expand_surd(x.surd());
}

std::vector<Convergent> rcf_convergents(const RcfExpansion& e, std::size_t n) {
    std::vector<Convergent> out;
    out.reserve(n);
    Integer p_prev = 1, q_prev = 0, p = e.a0, q = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        const Integer& a = e.digit(i);
        Integer pn = a * p + p_prev, qn = a * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = pn;
        q = qn;
        out.push_back({p, q});
    }
    return out;
}

Rational rcf_evaluate_prefix(const RcfExpansion& e, std::size_t n) {
    if (n == 0) return Rational(e.a0);
    const Convergent c = rcf_convergents(e, n).back();
    return c.value();
}

namespace {

// Product of [[0,1],[1,a]] over a digit range; maps a tail t to 1/(a_1 + 1/(... + t)).
Mobius tower(const std::vector<Integer>& digits) {
    Mobius m;
    for (const Integer& a : digits) m = m * Mobius{0, 1, 1, a};
    return m;
}

}  // namespace

Scalar rcf_evaluate(const RcfExpansion& e) {
    if (!e.period) {
        Rational v(0);
        for (auto it = e.pre.rbegin(); it != e.pre.rend(); ++it) v = reciprocal(Rational(*it) + v);
        return Scalar(Rational(e.a0) + v);
    }
    // The periodic tail y > 0 solves y = N.y, i.e. N21 y^2 + (N22 - N11) y - N12 = 0.
    // The coefficients share a factor that grows with the period; dividing it out leaves the
    // primitive form, whose discriminant is small enough to strip square factors from.
    const Mobius n = tower(*e.period);
    Integer a = n.m21, b = n.m22 - n.m11, c = -n.m12;
    const Integer g = gcd(gcd(a, b), c);
    a /= g;
    b /= g;
    c /= g;
    const Scalar y = surd_canonicalize(-b, 1, b * b - 4 * a * c, 2 * a);
    return Scalar(Rational(e.a0)) + mobius_apply(tower(e.pre), y);
}

}  // namespace romik
