#pragma once

#include "romik/integer.hpp"
#include "romik/rational.hpp"
#include "romik/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace romik {

/// [a0; pre..., (period...)] with the period repeated forever when present.
struct RcfExpansion {
    Integer a0{0};
    std::vector<Integer> pre;
    std::optional<std::vector<Integer>> period;

    bool is_finite() const { return !period.has_value(); }
    /// Number of partial quotients after a0; nullopt when infinite.
    std::optional<std::size_t> length() const;
    /// a_i for i >= 1, unrolling the period. Throws NeedMoreDigits past a finite end.
    const Integer& digit(std::size_t i) const;
    bool has_digit(std::size_t i) const;

    /// "[0;6,2]" for finite expansions, "[0;4,(2,1,2,4,1,1,6)]" with the period in parentheses.
    std::string str() const;

    friend bool operator==(const RcfExpansion&, const RcfExpansion&) = default;
};

struct Convergent {
    Integer p;
    Integer q{1};
    Rational value() const { return Rational(p, q); }
    friend bool operator==(const Convergent&, const Convergent&) = default;
};

RcfExpansion rcf_expand_rational(const Rational& x);
/// Eventually periodic expansion with minimal preperiod and period.
RcfExpansion rcf_expand_surd(const QuadSurd& x);
RcfExpansion rcf_expand(const Scalar& x);

/// P_1/Q_1 .. P_n/Q_n (the a0-only convergent is not listed).
std::vector<Convergent> rcf_convergents(const RcfExpansion& e, std::size_t n);

/// Exact value: Rational for finite, QuadSurd for periodic expansions.
Scalar rcf_evaluate(const RcfExpansion& e);
/// Value of [a0; a_1, ..., a_n].
Rational rcf_evaluate_prefix(const RcfExpansion& e, std::size_t n);

/// Rewrites pre/period into the unique minimal form (shortest period, shortest preperiod).
RcfExpansion rcf_normalize(RcfExpansion e);

}  // namespace romik
