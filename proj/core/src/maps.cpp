#include "romik/maps.hpp"

#include "romik/errors.hpp"

#include <array>
#include <unordered_map>

namespace romik {

namespace {

const Scalar kThird{Rational(1, 3)};
const Scalar kHalf{Rational(1, 2)};
const Scalar kZero{0L};
const Scalar kOne{1L};

void require_unit(const Scalar& x, std::string_view what) {
    if (x.sign() < 0 || compare(x, kOne) > 0)
        throw OutOfDomain(std::string(what) + " outside [0,1]: " + x.str());
}

}  // namespace

std::string_view to_string(Branch b) {
    switch (b) {
        case Branch::Left: return "Left";
        case Branch::Middle: return "Middle";
        case Branch::Right: return "Right";
    }
    return "?";
}

std::string_view to_string(OrbitEnd e) {
    switch (e) {
        case OrbitEnd::Terminal0: return "terminal0";
        case OrbitEnd::Terminal1: return "terminal1";
        case OrbitEnd::Periodic: return "periodic";
        case OrbitEnd::Truncated: return "truncated";
    }
    return "?";
}

DigitPair digit_pair(Branch b) {
    switch (b) {
        case Branch::Left: return {-1, 1};
        case Branch::Middle: return {1, 1};
        case Branch::Right: return {1, -1};
    }
    return {};
}

Branch branch_of(DigitPair p) {
    const bool ok = (p.delta == 1 || p.delta == -1) && (p.epsilon == 1 || p.epsilon == -1);
    if (!ok || (p.delta == -1 && p.epsilon == -1))
        throw InvalidPrefix("impossible digit pair (" + std::to_string(p.delta) + "," +
                            std::to_string(p.epsilon) + ")");
    if (p.delta == -1) return Branch::Left;
    return p.epsilon == 1 ? Branch::Middle : Branch::Right;
}

Branch classify(const Scalar& x) {
    require_unit(x, "classify");
    if (compare(x, kThird) < 0) return Branch::Left;
    if (compare(x, kHalf) < 0) return Branch::Middle;
    return Branch::Right;
}

const Mobius& branch_matrix(Branch b) {
    static const std::array<Mobius, 3> m{Mobius{1, 0, -2, 1}, Mobius{-2, 1, 1, 0},
                                         Mobius{2, -1, 1, 0}};
    return m[static_cast<std::size_t>(b)];
}

const Mobius& inverse_branch_matrix(Branch b) {
    static const std::array<Mobius, 3> m{Mobius{1, 0, 2, 1}, Mobius{0, 1, 1, 2},
                                         Mobius{0, 1, -1, 2}};
    return m[static_cast<std::size_t>(b)];
}

Scalar romik_step(const Scalar& x) {
    const Branch b = classify(x);
    return mobius_apply(branch_matrix(b), x);
}

Scalar inverse_branch(Branch b, const Scalar& y) {
    require_unit(y, "inverse_branch");
    return mobius_apply(inverse_branch_matrix(b), y);
}

Scalar farey_step(const Scalar& x) {
    require_unit(x, "farey_step");
    if (compare(x, kHalf) <= 0) return x / (kOne - x);
    return (kOne - x) / x;
}

OrbitRecord romik_orbit(const Scalar& x, std::size_t max_steps) {
    require_unit(x, "romik_orbit");
    OrbitRecord rec;
    rec.points.push_back(x);
    std::unordered_map<Scalar, std::size_t, ScalarHash> seen;
    if (x.is_surd()) seen.emplace(x, 0);
    Scalar cur = x;
    for (std::size_t i = 0;; ++i) {
        if (cur.is_rational()) {
            if (cur.is_zero()) { rec.end = OrbitEnd::Terminal0; return rec; }
            if (cur == kOne) { rec.end = OrbitEnd::Terminal1; return rec; }
        }
        if (i == max_steps) { rec.end = OrbitEnd::Truncated; return rec; }
        cur = romik_step(cur);
        if (cur.is_surd()) {
            auto [it, fresh] = seen.emplace(cur, rec.points.size());
            if (!fresh) {
                rec.end = OrbitEnd::Periodic;
                rec.preperiod = it->second;
                rec.period = rec.points.size() - it->second;
                return rec;
            }
        }
        rec.points.push_back(cur);
    }
}

}  // namespace romik
