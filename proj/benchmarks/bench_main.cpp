#include "romik/ergodic_stats.hpp"
#include "romik/io.hpp"
#include "romik/maps.hpp"
#include "romik/natural_extension.hpp"
#include "romik/rcf.hpp"
#include "romik/rewrite.hpp"
#include "romik/romik_expansion.hpp"

#include <benchmark/benchmark.h>

using namespace romik;

namespace {

const Scalar kPeriodic = parse_scalar("(-227+sqrt(72901))/274");
const Scalar kLiteral = parse_scalar("(250*sqrt(5)-250)/1969");

void BM_ExactOrbitPeriodic(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(romik_orbit(kPeriodic, 100));
}
BENCHMARK(BM_ExactOrbitPeriodic);

void BM_ExactStepSurd(benchmark::State& state) {
    for (auto _ : state) {
        Scalar x = kLiteral;
        for (int i = 0; i < state.range(0); ++i) x = romik_step(x);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_ExactStepSurd)->Arg(10)->Arg(100);

void BM_RcfExpandPeriodic(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(rcf_expand(kPeriodic));
}
BENCHMARK(BM_RcfExpandPeriodic);

// The literal reading has a period of tens of thousands of digits.
void BM_RcfExpandLiteral(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(rcf_expand(kLiteral));
}
BENCHMARK(BM_RcfExpandLiteral)->Unit(benchmark::kMillisecond);

void BM_RomikTerms(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(romik_terms(kPeriodic, state.range(0)));
}
BENCHMARK(BM_RomikTerms)->Arg(100)->Arg(1000);

void BM_Converter(benchmark::State& state) {
    const RcfExpansion e = rcf_expand(kPeriodic);
    for (auto _ : state) benchmark::DoNotOptimize(convert_rcf_to_romik(e, state.range(0)).terms(state.range(0)));
}
BENCHMARK(BM_Converter)->Arg(100)->Arg(1000);

void BM_VerifyInvariance(benchmark::State& state) {
    const RationalRect r = make_rect(Rational(2, 5), Rational(9, 20), Rational(1, 7), Rational(3, 5));
    for (auto _ : state) benchmark::DoNotOptimize(verify_invariance(r));
}
BENCHMARK(BM_VerifyInvariance);

void BM_FloatOrbit(benchmark::State& state) {
    const OpenInterval f{Rational(1, 2), Rational(2, 3)}, g{Rational(1, 3), Rational(2, 3)};
    const Rational x0 = sample_start(7);
    const auto n = static_cast<std::uint64_t>(100000);
    for (auto _ : state) benchmark::DoNotOptimize(count_orbit_visits(x0, n, f, g, static_cast<int>(state.range(0))));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_FloatOrbit)->Arg(64)->Arg(106)->Arg(113)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
