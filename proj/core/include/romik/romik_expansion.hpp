#pragma once

#include "romik/maps.hpp"
#include "romik/mobius.hpp"
#include "romik/rcf.hpp"
#include "romik/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace romik {

/// One partial quotient a_i together with the sign rho_{i-1} in front of it,
/// exactly the pair consumed by A_i = [[0, rho_{i-1}], [1, a_i]].
struct RomikTerm {
    int rho = 1;
    int a = 2;
    friend bool operator==(const RomikTerm&, const RomikTerm&) = default;
};

/// x = 1/(a_1 + rho_1/(a_2 + ... + rho_{N-1}/(a_N + tail_sign * tail))).
struct RomikExpansion {
    std::vector<RomikTerm> terms;
    /// R^steps(x) and the sign in front of it; absent once the prefix was cut mid-step.
    std::optional<Scalar> tail;
    int tail_sign = 1;
    std::size_t steps = 0;
    /// Left steps among the first `steps` applications of R.
    std::size_t left_steps = 0;
    /// 0 when the orbit was absorbed at 0 (finite expansion), 1 when it sits at the fixed point 1.
    std::optional<Scalar> terminal;

    bool finite() const { return terminal && terminal->is_zero(); }
    /// "[0;(1/2,1/0)^2,(1/2)^3,(-1/2)^2,...]"
    std::string compact() const;
    /// "[0;1/2,1/0,...]" with every term spelled out.
    std::string str() const;
};

/// Empty expansion of x with the whole of x as its tail.
RomikExpansion romik_start(const Scalar& x);
/// One application of R: appends one or two terms. Returns false, appending
/// nothing, once the tail is 0. Throws TerminalOrbit for a cut expansion.
bool romik_advance(RomikExpansion& e);

/// Digits for up to `steps` applications of R; Left emits two terms.
/// Stops early when the orbit reaches 0.
RomikExpansion romik_digits(const Scalar& x, std::size_t steps);
/// At least `count` terms (fewer only for finite expansions), cut to exactly `count`.
RomikExpansion romik_terms(const Scalar& x, std::size_t count);

/// Throws InvalidDigits when the digit constraints are violated.
void validate(const std::vector<RomikTerm>& terms);

struct Interval {
    Rational lo, hi;
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Points sharing the (delta, epsilon) prefix. Throws InvalidPrefix.
Interval cylinder_interval(const std::vector<DigitPair>& prefix);

struct RomikConvergent {
    std::size_t n = 0;
    Convergent c;
    Mobius m;  // M_n = A_1...A_n = [[p_{n-1}, p_n], [q_{n-1}, q_n]]
};

/// Entries n = 1..terms.size(). Throws InvalidDigits.
std::vector<RomikConvergent> convergents(const std::vector<RomikTerm>& terms);
/// det(M_n) = (-1)^n rho_1 ... rho_{n-1}
int expected_det(const std::vector<RomikTerm>& terms, std::size_t n);

struct ReconstructReport {
    std::size_t n = 0, m = 0, k = 0;
    int next_digit = 2;  // a_{n+1}
    int rho_n = 1;
    Convergent prev, cur;  // p_{n-1}/q_{n-1}, p_n/q_n
    Scalar tail;           // R^k(x)
    Scalar rhs;            // right-hand side of the reconstruction identity
    bool identity_holds = false;
    Scalar error_formula;  // closed form of |x - p_n/q_n|
    Scalar error_actual;
    bool error_holds = false;
};

/// Throws TerminalOrbit when the expansion ends before term n+1.
ReconstructReport reconstruct(const Scalar& x, std::size_t n);

/// Value of the tower with the exact tail kept (terms + tail_sign*tail).
Scalar evaluate_with_tail(const std::vector<RomikTerm>& terms, int tail_sign, const Scalar& tail);
/// Value with the tail replaced by 0. Throws PoleError when that is infinite.
Scalar evaluate_truncated(const std::vector<RomikTerm>& terms);

struct RepetitionEvent {
    std::size_t n = 0;
    Convergent current, two_back;  // p_n/q_n and p_{n-2}/q_{n-2}
    bool repeated = false;
    std::optional<Convergent> next;  // p_{n+1}/q_{n+1} when available
    Convergent mediant;              // (2p_{n-2}+p_{n-1}) / (2q_{n-2}+q_{n-1})
    bool mediant_holds = false;
};

std::vector<RepetitionEvent> repetition_structure(const std::vector<RomikTerm>& terms);

/// Smallest N with q_n > bound for every computed n >= N. Throws PrefixTooShort.
std::size_t tail_denominator_unbounded(const std::vector<RomikTerm>& terms, const Integer& bound);

std::string term_str(const RomikTerm& t);

}  // namespace romik
