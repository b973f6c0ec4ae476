#pragma once

#include "romik/orbit_kernels.hpp"
#include "romik/rational.hpp"
#include "romik/rcf.hpp"
#include "romik/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace romik {

struct RatioExperiment {
    std::uint64_t seed = 0;
    std::uint64_t iterations = 0;
    OpenInterval f_set, g_set;
    std::uint64_t counts_f = 0, counts_g = 0;
    /// counts_f / counts_g; absent when g was never visited.
    std::optional<double> ratio;
};

/// Dyadic start point a*2^-53 + b*2^-106 in (0,1) drawn from mt19937_64(seed).
Rational sample_start(std::uint64_t seed);

RatioExperiment hopf_ratio(const Rational& x0, std::uint64_t n, const OpenInterval& f,
                           const OpenInterval& g, int precision_bits);
RatioExperiment hopf_ratio_seeded(std::uint64_t seed, std::uint64_t n, const OpenInterval& f,
                                  const OpenInterval& g, int precision_bits);

/// One experiment per seed, fanned out over `threads` workers (0 = hardware
/// concurrency). Results come back in seed order regardless of scheduling.
std::vector<RatioExperiment> run_ratio_experiments(const std::vector<std::uint64_t>& seeds,
                                                   std::uint64_t n, const OpenInterval& f,
                                                   const OpenInterval& g, int precision_bits,
                                                   unsigned threads = 0);

/// "seed,n,counts_f,counts_g,ratio" header plus one row per experiment.
std::string ratio_csv(const std::vector<RatioExperiment>& rows);

/// r = base^exponent with base not a perfect power (r > 0, r != 1).
struct PrimitivePower {
    Rational base;
    Integer exponent;
};
PrimitivePower primitive_power(const Rational& r);

struct MeasureRatio {
    Rational arg_f, arg_g;  // mu(set) = log(arg)
    long double measure_f = 0, measure_g = 0;
    std::optional<Rational> exact;  // log(arg_f)/log(arg_g) when it is rational
    std::optional<long double> value;
};

/// Ratio of mu-masses for the density 1/(x(1-x)); empty sets have mass 0.
MeasureRatio measure_ratio_exact(const OpenInterval& f, const OpenInterval& g);

struct SkippedEntry {
    std::size_t index = 0;  // n of P_n/Q_n
    Convergent c;
    bool present = false;
};

struct SkippedReport {
    std::vector<SkippedEntry> rcf;
    std::vector<Convergent> romik;  // distinct Romik convergents, in order of appearance
    std::size_t romik_terms = 0;
    std::size_t missing = 0;
    double ratio = 0;                   // missing / depth
    std::vector<double> running_ratio;  // missing among the first n, over n
};

/// Which of the first `depth` RCF convergents never show up as Romik convergents.
SkippedReport skipped_convergents(const Scalar& x, std::size_t depth);

}  // namespace romik
