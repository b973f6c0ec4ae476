#pragma once

#include "romik/maps.hpp"
#include "romik/rational.hpp"
#include "romik/scalar.hpp"

#include <cstddef>
#include <vector>

namespace romik {

struct PlanarPoint {
    Scalar x, y;
    friend bool operator==(const PlanarPoint&, const PlanarPoint&) = default;
};

/// (R(x), S_b(y)) with b = classify(x).
PlanarPoint natext_step(const PlanarPoint& p);
/// Preimage under natext_step. On the seams y = 1/3 and y = 1/2 the Middle
/// preimage is preferred. Throws SeamPoint when no candidate maps back to p.
PlanarPoint natext_inverse(const PlanarPoint& p);

/// [x1,x2] x [y1,y2] with 0 <= x1 < x2 <= 1 and 0 <= y1 < y2 <= 1.
struct RationalRect {
    Rational x1, x2, y1, y2;
    friend bool operator==(const RationalRect&, const RationalRect&) = default;
};

/// Throws OutOfDomain on an empty or out-of-square rectangle.
RationalRect make_rect(Rational x1, Rational x2, Rational y1, Rational y2);

struct RectMeasure {
    Rational log_argument;
    long double value = 0;
};

/// Mass of dx dy / (x + y - 2xy)^2 as log of a rational cross-ratio.
/// Throws SingularRect for rectangles with a corner at (0,0) or (1,1), where the mass is infinite.
RectMeasure rect_measure(const RationalRect& r);

/// Branch whose closed interval contains [x1, x2]; throws NotApplicable otherwise.
Branch rect_branch(const RationalRect& r);
/// Image of a single-branch rectangle (monotone in both coordinates).
RationalRect natext_image(const RationalRect& r);
/// Pieces of r cut at x = 1/3 and x = 1/2.
std::vector<RationalRect> split_by_branch(const RationalRect& r);

struct InvarianceRecord {
    RationalRect rect, image;
    Rational log_argument, image_log_argument;
    bool equal = false;
};

InvarianceRecord verify_invariance(const RationalRect& r);

struct MarginalRecord {
    Rational x1, x2;
    Rational log_argument;  // from rect_measure(A x [0,1])
    Rational expected;      // x2(1-x1) / (x1(1-x2))
    bool equal = false;
};

MarginalRecord marginal_density_check(const Rational& x1, const Rational& x2);

struct InducedStep {
    PlanarPoint point;
    std::size_t return_time = 0;
};

/// First return to [0,1] x [0,1/2]. Throws OutOfDomain, CapExceeded.
InducedStep induced_step_O(const PlanarPoint& p, std::size_t cap = 1000000);

/// R^{k+1}(x) with k the first n >= 0 such that R^n(x) <= 1/2. Throws NoReturn, CapExceeded.
Scalar oocf_jump(const Scalar& x, std::size_t cap = 1000000);

}  // namespace romik
