#pragma once

#include "romik/mobius.hpp"
#include "romik/scalar.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace romik {

/// Half-open branch intervals: Left [0,1/3), Middle [1/3,1/2), Right [1/2,1].
enum class Branch { Left, Middle, Right };

std::string_view to_string(Branch b);

/// (delta, epsilon) digit functions; (-1,-1) is impossible.
struct DigitPair {
    int delta = 1;
    int epsilon = 1;
    friend bool operator==(const DigitPair&, const DigitPair&) = default;
};

DigitPair digit_pair(Branch b);
/// Throws InvalidPrefix for (-1,-1) or entries outside {-1,+1}.
Branch branch_of(DigitPair p);

/// Throws OutOfDomain unless 0 <= x <= 1.
Branch classify(const Scalar& x);

/// Forward branch of R as a Mobius matrix, and the inverse branch S_b.
const Mobius& branch_matrix(Branch b);
const Mobius& inverse_branch_matrix(Branch b);

Scalar romik_step(const Scalar& x);
Scalar inverse_branch(Branch b, const Scalar& y);
Scalar farey_step(const Scalar& x);

enum class OrbitEnd { Terminal0, Terminal1, Periodic, Truncated };
std::string_view to_string(OrbitEnd e);

/// points[0] = x. Terminal orbits end with the absorbing point; periodic
/// orbits list x_0 .. x_{pre+per-1}, all distinct, with R(points.back()) equal
/// to points[preperiod]; truncated orbits hold max_steps + 1 points.
struct OrbitRecord {
    std::vector<Scalar> points;
    OrbitEnd end = OrbitEnd::Truncated;
    std::size_t preperiod = 0;
    std::size_t period = 0;
};

OrbitRecord romik_orbit(const Scalar& x, std::size_t max_steps);

}  // namespace romik
