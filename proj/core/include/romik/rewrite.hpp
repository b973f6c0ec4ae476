#pragma once

#include "romik/integer.hpp"
#include "romik/rcf.hpp"
#include "romik/romik_expansion.hpp"
#include "romik/scalar.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace romik {

struct SignedTerm {
    int c = 1;
    Integer d;
    friend bool operator==(const SignedTerm&, const SignedTerm&) = default;
};

/// d0 + c_1/(d_1 + c_2/(d_2 + ...)), written [d0;c1/d1,c2/d2,...].
struct SignedCF {
    Integer d0{0};
    std::vector<SignedTerm> terms;

    /// Text form with c omitted when +1, e.g. "[0;2,-1/3]".
    std::string str() const;
    friend bool operator==(const SignedCF&, const SignedCF&) = default;
};

SignedCF from_rcf(const RcfExpansion& e, std::size_t digits);
/// Exact value of the finite expansion. Throws ZeroDenominator on a vanishing tower.
Scalar evaluate(const SignedCF& e);
/// Value with `tail` appended after the last term: ... c_n/(d_n + tail).
Scalar evaluate_with_tail(const SignedCF& e, const Scalar& tail);
/// r_k/s_k for k = 0..n (k = 0 is d0/1), via the matrix recurrence.
std::vector<Convergent> signed_convergents(const SignedCF& e);

/// Positions are 1-based term indices. All three throw NotApplicable.
SignedCF singularize(const SignedCF& e, std::size_t n);
SignedCF insert(const SignedCF& e, std::size_t n);
SignedCF strange_insert(const SignedCF& e, std::size_t n);

enum class StepCase { A1Greater2, A1Equal2, A1A2One, A1OneA2Big };
std::string_view to_string(StepCase c);

struct RcfStep {
    RcfExpansion result;
    StepCase step_case;
};

/// RCF of R(x) from the RCF of x in (0,1). Throws NeedMoreDigits, OutOfDomain.
RcfStep rcf_step_under_R(const RcfExpansion& e);
/// RCF of S(y) with the branch picked by a1 of x (a1 > 2 Left, 2 Middle, 1 Right).
RcfExpansion second_coordinate_rule(const Integer& a1_of_x, const RcfExpansion& y);

enum class ConversionStatus { Done, StepsExhausted };
std::string_view to_string(ConversionStatus s);

struct Conversion {
    ConversionStatus status = ConversionStatus::StepsExhausted;
    /// Romik terms that no later rewrite can touch.
    std::vector<RomikTerm> settled;
    /// Unsettled remainder (pointer term first), kept for inspection.
    std::vector<SignedTerm> pending;
    /// Done with an infinite remainder of 2s: pending is c/2 followed by 1/2 forever.
    bool periodic_twos = false;
    std::size_t steps_used = 0;

    /// settled, extended by the periodic 2s when known; at most `count` terms.
    std::vector<RomikTerm> terms(std::size_t count) const;
    SignedCF settled_cf() const;
};

/// Streams the RCF digits of x in [0,1) through pi, sigma and iota until every
/// partial quotient is 0 or 2. One step settles at least one term.
Conversion convert_rcf_to_romik(const RcfExpansion& e, std::size_t steps);

}  // namespace romik
