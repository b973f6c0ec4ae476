#pragma once

#include "romik/integer.hpp"
#include "romik/rational.hpp"

#include <cstddef>
#include <string>

namespace romik {

class Scalar;

/// Quadratic irrational (a + e*sqrt(d)) / c in canonical form:
/// d square-free and >= 2, e != 0, c > 0, gcd(a, e, c) = 1.
///
/// Instances only come out of surd_canonicalize() (or arithmetic on Scalar),
/// so two surds are equal iff their four fields are equal.
class QuadSurd {
public:
    const Integer& a() const { return a_; }
    const Integer& e() const { return e_; }
    const Integer& d() const { return d_; }
    const Integer& c() const { return c_; }

    /// Rational coordinates: value = rational_part() + radical_coeff() * sqrt(d).
    Rational rational_part() const { return Rational(a_, c_); }
    Rational radical_coeff() const { return Rational(e_, c_); }

    /// "(a+e*sqrt(d))/c", the literal grammar accepted by parse_scalar().
    std::string str() const;
    long double to_long_double() const;

    friend bool operator==(const QuadSurd&, const QuadSurd&) = default;

private:
    QuadSurd(Integer a, Integer e, Integer d, Integer c)
        : a_(std::move(a)), e_(std::move(e)), d_(std::move(d)), c_(std::move(c)) {}

    friend Scalar surd_canonicalize(Integer a, Integer e, Integer d0, Integer c);
    friend Scalar make_surd_squarefree(Integer a, Integer e, const Integer& d, Integer c);

    Integer a_, e_, d_, c_;
};

struct QuadSurdHash {
    std::size_t operator()(const QuadSurd& s) const noexcept;
};

/// Square-free decomposition n = f^2 * s; returns {f, s}. n >= 1.
std::pair<Integer, Integer> squarefree_decompose(const Integer& n);

}  // namespace romik
