#include "romik/rewrite.hpp"

#include "romik/errors.hpp"
#include "romik/mobius.hpp"

#include <algorithm>
#include <deque>

namespace romik {

namespace {

Integer& previous_d(SignedCF& e, std::size_t n) {
    return n == 1 ? e.d0 : e.terms[n - 2].d;
}

void require_index(const SignedCF& e, std::size_t n, std::string_view op) {
    if (n == 0 || n > e.terms.size())
        throw NotApplicable(std::string(op) + ": no term at position " + std::to_string(n));
}

Mobius cf_product(const SignedCF& e) {
    Mobius m{1, e.d0, 0, 1};
    for (const SignedTerm& t : e.terms) m = m * Mobius{0, t.c, 1, t.d};
    return m;
}

// Make sure at least k digits sit in pre when the expansion is periodic.
void unroll(RcfExpansion& e, std::size_t k) {
    if (!e.period) return;
    auto& per = *e.period;
    while (e.pre.size() < k) {
        e.pre.push_back(per.front());
        std::rotate(per.begin(), per.begin() + 1, per.end());
    }
}

}  // namespace

std::string SignedCF::str() const {
    std::string s = "[" + d0.get_str() + ";";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) s += ",";
        if (terms[i].c != 1) s += std::to_string(terms[i].c) + "/";
        s += terms[i].d.get_str();
    }
    return s + "]";
}

SignedCF from_rcf(const RcfExpansion& e, std::size_t digits) {
    SignedCF cf;
    cf.d0 = e.a0;
    for (std::size_t i = 1; i <= digits && e.has_digit(i); ++i) cf.terms.push_back({1, e.digit(i)});
    return cf;
}

Scalar evaluate(const SignedCF& e) {
    Scalar v(0L);
    for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it)
        v = Scalar(static_cast<long>(it->c)) / (Scalar(Rational(it->d)) + v);
    return Scalar(Rational(e.d0)) + v;
}

Scalar evaluate_with_tail(const SignedCF& e, const Scalar& tail) {
    return mobius_apply(cf_product(e), tail);
}

std::vector<Convergent> signed_convergents(const SignedCF& e) {
    std::vector<Convergent> out;
    Mobius m{1, e.d0, 0, 1};
    out.push_back({m.m12, m.m22});
    for (const SignedTerm& t : e.terms) {
        m = m * Mobius{0, t.c, 1, t.d};
        out.push_back({m.m12, m.m22});
    }
    return out;
}

SignedCF singularize(const SignedCF& e, std::size_t n) {
    require_index(e, n, "singularize");
    if (e.terms[n - 1].c != 1 || e.terms[n - 1].d != 1)
        throw NotApplicable("singularize: term " + std::to_string(n) + " is not 1/1");
    if (n == e.terms.size() || e.terms[n].c != 1)
        throw NotApplicable("singularize: term " + std::to_string(n) + " needs a following +1 term");
    SignedCF out = e;
    previous_d(out, n) += 1;
    out.terms[n] = {-1, out.terms[n].d + 1};
    out.terms.erase(out.terms.begin() + static_cast<std::ptrdiff_t>(n - 1));
    return out;
}

SignedCF insert(const SignedCF& e, std::size_t n) {
    require_index(e, n, "insert");
    const SignedTerm& t = e.terms[n - 1];
    if (t.c != 1 || t.d < 2) throw NotApplicable("insert: term " + std::to_string(n) + " is not 1/b with b >= 2");
    SignedCF out = e;
    previous_d(out, n) += 1;
    const auto at = out.terms.begin() + static_cast<std::ptrdiff_t>(n - 1);
    *at = {1, t.d - 1};
    out.terms.insert(at, {-1, Integer(1)});
    return out;
}

namespace {

// c/(a + xi) = c/(2 + 1/(0 + 1/(a - 2 + xi))) holds for either sign of c.
void strange_insert_any_sign(std::vector<SignedTerm>& terms, std::size_t i) {
    const int c = terms[i].c;
    const Integer rest = terms[i].d - 2;
    terms[i] = {c, Integer(2)};
    terms.insert(terms.begin() + static_cast<std::ptrdiff_t>(i + 1), {{1, Integer(0)}, {1, rest}});
}

}  // namespace

SignedCF strange_insert(const SignedCF& e, std::size_t n) {
    require_index(e, n, "strange_insert");
    const SignedTerm& t = e.terms[n - 1];
    if (t.c != 1 || t.d < 3) throw NotApplicable("strange_insert: term " + std::to_string(n) + " is not 1/a with a >= 3");
    SignedCF out = e;
    strange_insert_any_sign(out.terms, n - 1);
    return out;
}

std::string_view to_string(StepCase c) {
    switch (c) {
        case StepCase::A1Greater2: return "a1>2";
        case StepCase::A1Equal2: return "a1=2";
        case StepCase::A1A2One: return "a1=a2=1";
        case StepCase::A1OneA2Big: return "a1=1,a2>=2";
    }
    return "?";
}

RcfStep rcf_step_under_R(const RcfExpansion& input) {
    RcfExpansion e = rcf_normalize(input);
    if (e.a0 != 0 || (e.is_finite() && e.pre.empty()))
        throw OutOfDomain("rcf_step_under_R needs x in (0,1), got " + e.str());
    unroll(e, 3);
    auto& d = e.pre;
    auto need = [&](std::size_t k) {
        if (d.size() < k) throw NeedMoreDigits("case needs a_" + std::to_string(k) + " of " + e.str());
    };
    RcfStep out;
    if (d[0] > 2) {
        d[0] -= 2;
        out.step_case = StepCase::A1Greater2;
    } else if (d[0] == 2) {
        d.erase(d.begin());
        out.step_case = StepCase::A1Equal2;
    } else {
        need(2);
        if (d[1] == 1) {
            need(3);
            d[2] += 1;
            d.erase(d.begin(), d.begin() + 2);
            out.step_case = StepCase::A1A2One;
        } else {
            d[1] -= 1;
            out.step_case = StepCase::A1OneA2Big;
        }
    }
    out.result = rcf_normalize(std::move(e));
    return out;
}

RcfExpansion second_coordinate_rule(const Integer& a1, const RcfExpansion& input) {
    if (a1 < 1) throw OutOfDomain("a1 must be positive, got " + a1.get_str());
    RcfExpansion y = rcf_normalize(input);
    const bool is_zero = y.a0 == 0 && y.is_finite() && y.pre.empty();
    const bool is_one = y.a0 == 1 && y.is_finite() && y.pre.empty();
    if (!(is_zero || is_one || y.a0 == 0)) throw OutOfDomain("y outside [0,1]: " + y.str());

    RcfExpansion out;
    if (is_zero || is_one) {
        // S_l(0)=0, S_m(0)=S_r(0)=1/2; S_l(1)=S_m(1)=1/3, S_r(1)=1.
        if (is_zero) {
            if (a1 > 2) return out;
            out.pre = {2};
        } else {
            if (a1 == 1) { out.a0 = 1; return out; }
            out.pre = {3};
        }
        return out;
    }
    unroll(y, 2);
    auto& b = y.pre;
    if (a1 > 2) {
        b[0] += 2;
    } else if (a1 == 2) {
        b.insert(b.begin(), Integer(2));
    } else if (b[0] == 1) {
        if (b.size() < 2) throw NeedMoreDigits("second coordinate rule needs b2 of " + y.str());
        b[1] += 1;
    } else {
        b[0] -= 1;
        b.insert(b.begin(), {Integer(1), Integer(1)});
    }
    return rcf_normalize(std::move(y));
}

std::string_view to_string(ConversionStatus s) {
    return s == ConversionStatus::Done ? "done" : "steps_exhausted";
}

std::vector<RomikTerm> Conversion::terms(std::size_t count) const {
    std::vector<RomikTerm> out(settled.begin(), settled.begin() + static_cast<std::ptrdiff_t>(std::min(count, settled.size())));
    if (periodic_twos && !pending.empty()) {
        if (out.size() < count) out.push_back({pending.front().c, 2});
        while (out.size() < count) out.push_back({1, 2});
    }
    return out;
}

SignedCF Conversion::settled_cf() const {
    SignedCF cf;
    for (const RomikTerm& t : settled) cf.terms.push_back({t.rho, Integer(t.a)});
    return cf;
}

Conversion convert_rcf_to_romik(const RcfExpansion& input, std::size_t steps) {
    const RcfExpansion e = rcf_normalize(input);
    if (e.a0 != 0) throw OutOfDomain("converter needs x in [0,1), got " + e.str());

    Conversion out;
    // Window of unsettled terms; everything after the front carries c = +1.
    std::deque<SignedTerm> w;
    std::size_t next_digit = 1;
    auto fill = [&](std::size_t k) {
        while (w.size() < k && e.has_digit(next_digit)) w.push_back({1, e.digit(next_digit++)});
    };
    auto settle = [&](int c, int a) { out.settled.push_back({c, a}); };
    // True once the untouched stream is the period [2] repeating.
    auto only_twos_left = [&] {
        return e.period && e.period->size() == 1 && (*e.period)[0] == 2 &&
               next_digit > e.pre.size() &&
               std::all_of(w.begin() + 1, w.end(), [](const SignedTerm& t) { return t.d == 2; });
    };

    for (; out.steps_used < steps; ++out.steps_used) {
        fill(3);
        if (w.empty()) { out.status = ConversionStatus::Done; break; }
        SignedTerm& t = w.front();
        if (t.d == 2 && only_twos_left()) {
            out.periodic_twos = true;
            out.status = ConversionStatus::Done;
            break;
        }
        if (t.d == 2 || t.d == 0) {
            settle(t.c, static_cast<int>(t.d.get_si()));
            w.pop_front();
        } else if (t.d == 3 && w.size() == 1) {
            // c/3 = c/(2 + 1/1); the tail 1/3 takes the Middle branch, not the Left one.
            settle(t.c, 2);
            t = {1, Integer(1)};
        } else if (t.d >= 3) {
            // pi: c/(a + xi) -> c/(2 + 1/(0 + 1/(a-2 + xi)))
            settle(t.c, 2);
            settle(1, 0);
            t = {1, t.d - 2};
        } else if (w.size() == 1) {
            // c/1 = c/(2 - 1/1): the fixed point 1 repeats the Right branch forever.
            settle(t.c, 2);
            t = {-1, Integer(1)};
        } else if (w[1].d == 1) {
            if (w.size() == 2) {
                // c/(1 + 1/1) = c/2
                settle(t.c, 2);
                w.clear();
            } else {
                // sigma at the following 1: c/(1 + 1/(1 + 1/(b + xi))) -> c/(2 - 1/(b + 1 + xi))
                settle(t.c, 2);
                const Integer b = w[2].d;
                w.erase(w.begin(), w.begin() + 2);
                w.front() = {-1, b + 1};
            }
        } else {
            // iota at the following b >= 2: c/(1 + 1/(b + xi)) -> c/(2 - 1/(1 + 1/(b - 1 + xi)))
            settle(t.c, 2);
            const Integer b = w[1].d;
            w.pop_front();
            w.front() = {1, b - 1};
            w.push_front({-1, Integer(1)});
        }
    }
    if (out.steps_used >= steps && out.status != ConversionStatus::Done)
        out.status = ConversionStatus::StepsExhausted;
    out.pending.assign(w.begin(), w.end());
    return out;
}

}  // namespace romik
