#include "romik/romik_expansion.hpp"

#include "romik/errors.hpp"

#include <algorithm>

namespace romik {

namespace {

const Scalar kOne{1L};

struct Recurrence {
    // p[k+1], q[k+1] hold p_k, q_k for k = -1..N.
    std::vector<Integer> p, q;
    const Integer& P(std::ptrdiff_t k) const { return p[static_cast<std::size_t>(k + 1)]; }
    const Integer& Q(std::ptrdiff_t k) const { return q[static_cast<std::size_t>(k + 1)]; }
};

Recurrence recurrence(const std::vector<RomikTerm>& terms) {
    Recurrence r;
    r.p = {1, 0};
    r.q = {0, 1};
    for (const RomikTerm& t : terms) {
        const std::size_t s = r.p.size();
        r.p.push_back(t.a * r.p[s - 1] + t.rho * r.p[s - 2]);
        r.q.push_back(t.a * r.q[s - 1] + t.rho * r.q[s - 2]);
    }
    return r;
}

Mobius product(const std::vector<RomikTerm>& terms) {
    Mobius m;
    for (const RomikTerm& t : terms) m = m * Mobius{0, t.rho, 1, t.a};
    return m;
}

void push_step(RomikExpansion& e, Branch b) {
    e.terms.push_back({e.tail_sign, 2});
    switch (b) {
        case Branch::Left:
            e.terms.push_back({1, 0});
            e.tail_sign = 1;
            ++e.left_steps;
            break;
        case Branch::Middle: e.tail_sign = 1; break;
        case Branch::Right: e.tail_sign = -1; break;
    }
    ++e.steps;
}

}  // namespace

RomikExpansion romik_start(const Scalar& x) {
    classify(x);
    RomikExpansion e;
    e.tail = x;
    if (x.is_zero()) e.terminal = Scalar(0L);
    return e;
}

bool romik_advance(RomikExpansion& e) {
    if (!e.tail) throw TerminalOrbit("expansion was cut inside a step");
    const Scalar& t = *e.tail;
    if (t.is_zero()) {
        e.terminal = Scalar(0L);
        return false;
    }
    if (t == kOne) e.terminal = kOne;
    push_step(e, classify(t));
    e.tail = romik_step(t);
    if (e.tail->is_zero()) e.terminal = Scalar(0L);
    return true;
}

std::string term_str(const RomikTerm& t) {
    return std::to_string(t.rho) + "/" + std::to_string(t.a);
}

std::string RomikExpansion::str() const {
    std::string s = "[0;";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) s += ",";
        s += term_str(terms[i]);
    }
    if (!finite()) s += terms.empty() ? "..." : ",...";
    return s + "]";
}

std::string RomikExpansion::compact() const {
    std::vector<std::string> parts;
    std::size_t i = 0;
    while (i < terms.size()) {
        const bool pair = i + 1 < terms.size() && terms[i + 1].a == 0;
        const std::size_t w = pair ? 2 : 1;
        std::size_t reps = 1;
        auto same_block = [&](std::size_t j) {
            if (j + w > terms.size()) return false;
            for (std::size_t k = 0; k < w; ++k)
                if (!(terms[j + k] == terms[i + k])) return false;
            return true;
        };
        while (same_block(i + reps * w)) ++reps;
        std::string block = term_str(terms[i]);
        if (pair) block += "," + term_str(terms[i + 1]);
        if (reps > 1) parts.push_back("(" + block + ")^" + std::to_string(reps));
        else parts.push_back(block);
        i += reps * w;
    }
    if (!finite()) parts.push_back("...");
    std::string s = "[0;";
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) s += ",";
        s += parts[k];
    }
    return s + "]";
}

RomikExpansion romik_digits(const Scalar& x, std::size_t steps) {
    RomikExpansion e = romik_start(x);
    for (std::size_t i = 0; i < steps; ++i)
        if (!romik_advance(e)) break;
    if (e.tail->is_zero()) e.terminal = Scalar(0L);
    else if (*e.tail == kOne) e.terminal = kOne;
    return e;
}

RomikExpansion romik_terms(const Scalar& x, std::size_t count) {
    RomikExpansion e = romik_start(x);
    while (e.terms.size() < count)
        if (!romik_advance(e)) break;
    if (e.terms.size() > count) {
        e.terms.resize(count);
        e.tail.reset();
    }
    return e;
}

void validate(const std::vector<RomikTerm>& terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const RomikTerm& t = terms[i];
        const std::string at = " at term " + std::to_string(i + 1);
        if (t.a != 0 && t.a != 2) throw InvalidDigits("digit " + std::to_string(t.a) + at);
        if (t.rho != 1 && t.rho != -1) throw InvalidDigits("sign " + std::to_string(t.rho) + at);
        if (i == 0 && (t.a != 2 || t.rho != 1)) throw InvalidDigits("expansion must start with 1/2");
        if (t.a == 0) {
            if (t.rho != 1 || terms[i - 1].a != 2) throw InvalidDigits("0 must follow a 2 with sign +1" + at);
            if (i + 1 < terms.size() && terms[i + 1].rho != 1)
                throw InvalidDigits("sign after a 0 must be +1" + at);
        }
    }
}

Interval cylinder_interval(const std::vector<DigitPair>& prefix) {
    Mobius m;
    for (const DigitPair& d : prefix) m = m * inverse_branch_matrix(branch_of(d));
    Rational a = mobius_apply(m, Scalar(0L)).rational();
    Rational b = mobius_apply(m, Scalar(1L)).rational();
    if (b < a) std::swap(a, b);
    return {a, b};
}

std::vector<RomikConvergent> convergents(const std::vector<RomikTerm>& terms) {
    validate(terms);
    std::vector<RomikConvergent> out;
    out.reserve(terms.size());
    Mobius m;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        m = m * Mobius{0, terms[i].rho, 1, terms[i].a};
        out.push_back({i + 1, {m.m12, m.m22}, m});
    }
    return out;
}

int expected_det(const std::vector<RomikTerm>& terms, std::size_t n) {
    int s = (n % 2 == 0) ? 1 : -1;  // each factor A_k has det -rho_{k-1}
    for (std::size_t i = 1; i < n; ++i) s *= terms[i].rho;  // rho_i sits on term i+1
    return s;
}

Scalar evaluate_with_tail(const std::vector<RomikTerm>& terms, int tail_sign, const Scalar& tail) {
    return mobius_apply(product(terms), Scalar(static_cast<long>(tail_sign)) * tail);
}

Scalar evaluate_truncated(const std::vector<RomikTerm>& terms) {
    return mobius_apply(product(terms), Scalar(0L));
}

ReconstructReport reconstruct(const Scalar& x, std::size_t n) {
    if (n == 0) throw OutOfDomain("reconstruct needs n >= 1");
    const RomikExpansion e = romik_terms(x, n + 1);
    if (e.terms.size() < n + 1)
        throw TerminalOrbit("expansion of " + x.str() + " ends after " +
                            std::to_string(e.terms.size()) + " terms");
    const std::vector<RomikTerm> head(e.terms.begin(), e.terms.begin() + static_cast<std::ptrdiff_t>(n));
    const Recurrence r = recurrence(head);
    const auto N = static_cast<std::ptrdiff_t>(n);

    ReconstructReport rep;
    rep.n = n;
    rep.m = static_cast<std::size_t>(std::count_if(head.begin(), head.end(), [](const RomikTerm& t) { return t.a == 0; }));
    rep.k = n - rep.m;
    rep.next_digit = e.terms[n].a;
    rep.rho_n = e.terms[n].rho;
    rep.prev = {r.P(N - 1), r.Q(N - 1)};
    rep.cur = {r.P(N), r.Q(N)};

    Scalar t = x;
    for (std::size_t i = 0; i < rep.k; ++i) t = romik_step(t);
    rep.tail = t;

    const Scalar pn(Rational(rep.cur.p)), qn(Rational(rep.cur.q));
    const Scalar pm(Rational(rep.prev.p)), qm(Rational(rep.prev.q));
    const Scalar rho(static_cast<long>(rep.rho_n));
    if (rep.next_digit == 2) {
        rep.rhs = (pn + rho * pm * t) / (qn + rho * qm * t);
        rep.error_formula = t / (qn * (qn + rho * qm * t));
    } else {
        rep.rhs = (pm + pn * t) / (qm + qn * t);
        rep.error_formula = Scalar(1L) / (qn * (qm + qn * t));
    }
    rep.identity_holds = rep.rhs == x;
    Scalar diff = x - pn / qn;
    if (diff.sign() < 0) diff = -diff;
    rep.error_actual = diff;
    rep.error_holds = rep.error_actual == rep.error_formula;
    return rep;
}

std::vector<RepetitionEvent> repetition_structure(const std::vector<RomikTerm>& terms) {
    const Recurrence r = recurrence(terms);
    std::vector<RepetitionEvent> out;
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i].a != 0) continue;
        const auto n = static_cast<std::ptrdiff_t>(i + 1);
        RepetitionEvent ev;
        ev.n = i + 1;
        ev.current = {r.P(n), r.Q(n)};
        ev.two_back = {r.P(n - 2), r.Q(n - 2)};
        ev.repeated = ev.current.p * ev.two_back.q == ev.two_back.p * ev.current.q;
        ev.mediant = {2 * r.P(n - 2) + r.P(n - 1), 2 * r.Q(n - 2) + r.Q(n - 1)};
        if (i + 1 < terms.size()) {
            ev.next = Convergent{r.P(n + 1), r.Q(n + 1)};
            ev.mediant_holds = *ev.next == ev.mediant;
        }
        out.push_back(std::move(ev));
    }
    return out;
}

std::size_t tail_denominator_unbounded(const std::vector<RomikTerm>& terms, const Integer& bound) {
    const Recurrence r = recurrence(terms);
    const auto len = static_cast<std::ptrdiff_t>(terms.size());
    if (len == 0 || r.Q(len) <= bound)
        throw PrefixTooShort("q_n <= " + bound.get_str() + " at the end of the computed prefix");
    std::ptrdiff_t n = len;
    while (n > 1 && r.Q(n - 1) > bound) --n;
    return static_cast<std::size_t>(n);
}

}  // namespace romik
