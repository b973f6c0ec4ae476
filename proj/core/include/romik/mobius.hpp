#pragma once

#include "romik/integer.hpp"
#include "romik/scalar.hpp"

#include <iosfwd>
#include <string>

namespace romik {

/// Integer 2x2 matrix [[m11, m12], [m21, m22]] acting by x -> (m11 x + m12)/(m21 x + m22).
struct Mobius {
    Integer m11{1}, m12{0}, m21{0}, m22{1};

    static Mobius identity() { return {}; }

    Integer det() const { return m11 * m22 - m12 * m21; }

    friend Mobius operator*(const Mobius& m, const Mobius& n) {
        return {m.m11 * n.m11 + m.m12 * n.m21, m.m11 * n.m12 + m.m12 * n.m22,
                m.m21 * n.m11 + m.m22 * n.m21, m.m21 * n.m12 + m.m22 * n.m22};
    }
    friend bool operator==(const Mobius&, const Mobius&) = default;

    /// "[[m11,m12],[m21,m22]]"
    std::string str() const;
};

/// Throws PoleError when m21*x + m22 == 0.
Scalar mobius_apply(const Mobius& m, const Scalar& x);
inline Mobius mobius_compose(const Mobius& m, const Mobius& n) { return m * n; }

std::ostream& operator<<(std::ostream& os, const Mobius& m);

}  // namespace romik
