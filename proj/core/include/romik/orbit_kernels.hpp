#pragma once

#include "romik/rational.hpp"

#include <cstdint>
#include <string_view>

namespace romik {

/// Floating types used for long orbits; picked from the requested significand bits.
enum class FloatBackend { LongDouble, DoubleDouble, Float128, Mpfr };

/// <= 64 long double, <= 106 double-double, <= 113 binary128, otherwise MPFR.
FloatBackend backend_for_bits(int bits);
std::string_view to_string(FloatBackend b);

struct OpenInterval {
    Rational lo, hi;
    bool empty() const { return !(lo < hi); }
    friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

struct OrbitCounts {
    std::uint64_t f = 0, g = 0;
};

/// Visits of x_0 .. x_{n-1} (x_i = R^i(x0)) to the open intervals f and g.
/// Throws DegenerateOrbit if the float orbit lands exactly on 0 or 1.
OrbitCounts count_orbit_visits(const Rational& x0, std::uint64_t n, const OpenInterval& f,
                               const OpenInterval& g, int precision_bits);

}  // namespace romik
