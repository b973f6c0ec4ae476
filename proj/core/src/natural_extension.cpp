#include "romik/natural_extension.hpp"

#include "romik/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace romik {

namespace {

const Rational kThird(1, 3);
const Rational kHalf(1, 2);

Rational u(const Rational& x, const Rational& y) { return x + y - 2 * x * y; }

Rational apply(const Mobius& m, const Rational& x) { return mobius_apply(m, Scalar(x)).rational(); }

}  // namespace

PlanarPoint natext_step(const PlanarPoint& p) {
    const Branch b = classify(p.x);
    return {romik_step(p.x), inverse_branch(b, p.y)};
}

PlanarPoint natext_inverse(const PlanarPoint& p) {
    classify(p.x);
    classify(p.y);
    const Scalar third{kThird}, half{kHalf};
    std::vector<Branch> candidates;
    const auto c3 = compare(p.y, third), c2 = compare(p.y, half);
    if (c3 < 0) candidates = {Branch::Left};
    else if (c3 == 0) candidates = {Branch::Middle, Branch::Left};
    else if (c2 < 0) candidates = {Branch::Middle};
    else if (c2 == 0) candidates = {Branch::Middle, Branch::Right};
    else candidates = {Branch::Right};
    for (Branch b : candidates) {
        PlanarPoint q{inverse_branch(b, p.x), mobius_apply(branch_matrix(b), p.y)};
        if (classify(q.x) == b && natext_step(q) == p) return q;
    }
    throw SeamPoint("(" + p.x.str() + ", " + p.y.str() + ") has no preimage off the seams");
}

RationalRect make_rect(Rational x1, Rational x2, Rational y1, Rational y2) {
    const Rational zero(0), one(1);
    if (!(zero <= x1 && x1 < x2 && x2 <= one && zero <= y1 && y1 < y2 && y2 <= one))
        throw OutOfDomain("invalid rectangle [" + x1.str() + "," + x2.str() + "]x[" + y1.str() +
                          "," + y2.str() + "]");
    return {std::move(x1), std::move(x2), std::move(y1), std::move(y2)};
}

RectMeasure rect_measure(const RationalRect& r) {
    make_rect(r.x1, r.x2, r.y1, r.y2);
    const Rational den = u(r.x1, r.y1) * u(r.x2, r.y2);
    if (den.is_zero())
        throw SingularRect("rectangle touches (0,0) or (1,1), where the density blows up");
    RectMeasure m;
    m.log_argument = u(r.x2, r.y1) * u(r.x1, r.y2) / den;
    m.value = log(m.log_argument);
    return m;
}

Branch rect_branch(const RationalRect& r) {
    if (r.x2 <= kThird) return Branch::Left;
    if (r.x1 >= kThird && r.x2 <= kHalf) return Branch::Middle;
    if (r.x1 >= kHalf) return Branch::Right;
    throw NotApplicable("[" + r.x1.str() + "," + r.x2.str() + "] straddles a branch boundary");
}

RationalRect natext_image(const RationalRect& r) {
    const Branch b = rect_branch(r);
    Rational a1 = apply(branch_matrix(b), r.x1), a2 = apply(branch_matrix(b), r.x2);
    Rational b1 = apply(inverse_branch_matrix(b), r.y1), b2 = apply(inverse_branch_matrix(b), r.y2);
    if (a2 < a1) std::swap(a1, a2);
    if (b2 < b1) std::swap(b1, b2);
    return {a1, a2, b1, b2};
}

std::vector<RationalRect> split_by_branch(const RationalRect& r) {
    std::vector<RationalRect> out;
    Rational lo = r.x1;
    for (const Rational& cut : {kThird, kHalf}) {
        if (lo < cut && cut < r.x2) {
            out.push_back({lo, cut, r.y1, r.y2});
            lo = cut;
        }
    }
    out.push_back({lo, r.x2, r.y1, r.y2});
    return out;
}

InvarianceRecord verify_invariance(const RationalRect& r) {
    InvarianceRecord rec;
    rec.rect = r;
    rec.image = natext_image(r);
    rec.log_argument = rect_measure(r).log_argument;
    rec.image_log_argument = rect_measure(rec.image).log_argument;
    rec.equal = rec.log_argument == rec.image_log_argument;
    return rec;
}

MarginalRecord marginal_density_check(const Rational& x1, const Rational& x2) {
    if (!(Rational(0) < x1 && x1 <= x2 && x2 < Rational(1)))
        throw OutOfDomain("marginal check needs 0 < x1 <= x2 < 1");
    MarginalRecord rec;
    rec.x1 = x1;
    rec.x2 = x2;
    rec.expected = x2 * (1 - x1) / (x1 * (1 - x2));
    rec.log_argument = x1 == x2 ? Rational(1) : rect_measure({x1, x2, 0, 1}).log_argument;
    rec.equal = rec.log_argument == rec.expected;
    return rec;
}

InducedStep induced_step_O(const PlanarPoint& p, std::size_t cap) {
    classify(p.x);
    const Scalar half{kHalf};
    if (p.y.sign() < 0 || compare(p.y, half) > 0)
        throw OutOfDomain("(" + p.x.str() + ", " + p.y.str() + ") is not in [0,1]x[0,1/2]");
    PlanarPoint q = p;
    for (std::size_t n = 1; n <= cap; ++n) {
        q = natext_step(q);
        if (compare(q.y, half) <= 0) return {q, n};
    }
    throw CapExceeded("no return to O within " + std::to_string(cap) + " steps");
}

Scalar oocf_jump(const Scalar& x, std::size_t cap) {
    classify(x);
    const Scalar half{kHalf}, one{1L};
    Scalar cur = x;
    for (std::size_t k = 0; k <= cap; ++k) {
        if (compare(cur, half) <= 0) return romik_step(cur);
        if (cur == one) throw NoReturn("orbit of " + x.str() + " is absorbed at 1");
        cur = romik_step(cur);
    }
    throw CapExceeded("orbit of " + x.str() + " stays above 1/2 for " + std::to_string(cap) + " steps");
}

}  // namespace romik
