#include "oracle.hpp"

#include "romik/errors.hpp"
#include "romik/io.hpp"
#include "romik/maps.hpp"
#include "romik/rcf.hpp"

#include <doctest.h>

using namespace romik;
using oracle::Q;

namespace {

Scalar q(long p, long r) { return Scalar(Rational(p, r)); }

const Scalar kPeriodic = parse_scalar("(-227+sqrt(72901))/274");
const Scalar kLiteral = parse_scalar("(250*sqrt(5)-250)/1969");

}  // namespace

TEST_SUITE("maps") {

TEST_CASE("classify examples and boundaries") {
    CHECK(classify(q(1, 5)) == Branch::Left);
    CHECK(classify(q(1, 3)) == Branch::Middle);
    CHECK(classify(q(1, 2)) == Branch::Right);
    CHECK(classify(Scalar(0L)) == Branch::Left);
    CHECK(classify(Scalar(1L)) == Branch::Right);
    CHECK_THROWS_AS(classify(q(3, 2)), OutOfDomain);
    CHECK_THROWS_AS(classify(q(-1, 7)), OutOfDomain);
}

TEST_CASE("digit pairs per branch") {
    CHECK(digit_pair(Branch::Left) == DigitPair{-1, 1});
    CHECK(digit_pair(Branch::Middle) == DigitPair{1, 1});
    CHECK(digit_pair(Branch::Right) == DigitPair{1, -1});
    CHECK_THROWS_AS(branch_of(DigitPair{-1, -1}), InvalidPrefix);
}

TEST_CASE("romik_step examples") {
    CHECK(romik_step(q(1, 5)) == q(1, 3));
    CHECK(romik_step(q(3, 4)) == q(2, 3));
    CHECK(romik_step(q(1, 2)) == Scalar(0L));
    CHECK(romik_step(Scalar(0L)) == Scalar(0L));
    CHECK(romik_step(Scalar(1L)) == Scalar(1L));
    // R(1/n) = 1/(n-2) and R(n/(n+1)) = (n-1)/n.
    for (long n = 3; n <= 40; ++n) CHECK(romik_step(q(1, n)) == q(1, n - 2));
    for (long n = 1; n <= 40; ++n) CHECK(romik_step(q(n, n + 1)) == q(n - 1, n));
}

TEST_CASE("R of the period-10 point has RCF [0;4,(2,1,2,4,1,1,6)]") {
    CHECK(rcf_expand(romik_step(kPeriodic)).str() == "[0;4,(2,1,2,4,1,1,6)]");
    // The decimal literal shares the first digits but is not this surd.
    const RcfExpansion lit = rcf_expand(romik_step(kLiteral));
    const std::vector<long> want = {4, 2, 1, 2, 4, 1, 1, 6};
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(lit.digit(i + 1) == want[i]);
    CHECK(lit.str() != "[0;4,(2,1,2,4,1,1,6)]");
}

TEST_CASE("romik_step matches the direct branch formulas") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 2000; ++i) {
        const Rational r = oracle::random_rational(rng, 400);
        CHECK(oracle::to_q(romik_step(Scalar(r)).rational()) == oracle::romik(oracle::to_q(r)));
    }
    for (int i = 0; i < 500; ++i) {
        const Scalar s = oracle::random_surd(rng);
        CHECK(abs(oracle::to_f(romik_step(s)) - oracle::romik(oracle::to_f(s))) < oracle::F("1e-60"));
    }
}

TEST_CASE("romik_orbit examples") {
    const OrbitRecord a = romik_orbit(q(2, 5), 100);
    CHECK(a.end == OrbitEnd::Terminal0);
    REQUIRE(a.points.size() == 3);
    CHECK(a.points[0] == q(2, 5));
    CHECK(a.points[1] == q(1, 2));
    CHECK(a.points[2] == Scalar(0L));

    const Scalar r2 = surd_canonicalize(0, 1, 2, 2);
    const OrbitRecord b = romik_orbit(r2, 100);
    CHECK(b.end == OrbitEnd::Periodic);
    CHECK(b.preperiod == 0);
    CHECK(b.period == 3);

    const OrbitRecord c = romik_orbit(kPeriodic, 100);
    CHECK(c.end == OrbitEnd::Periodic);
    CHECK(c.preperiod == 0);
    CHECK(c.period == 10);

    const OrbitRecord d = romik_orbit(kPeriodic, 4);
    CHECK(d.end == OrbitEnd::Truncated);
    CHECK(d.points.size() == 5);

    const OrbitRecord e = romik_orbit(q(1, 3), 10);
    CHECK(e.end == OrbitEnd::Terminal1);
    CHECK_THROWS_AS(romik_orbit(q(5, 4), 10), OutOfDomain);
}

TEST_CASE("periodic orbits close up exactly") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 20; ++i) {
        const Scalar s = oracle::random_surd(rng, 60);
        const OrbitRecord o = romik_orbit(s, 100000);
        REQUIRE(o.end == OrbitEnd::Periodic);
        CHECK(romik_step(o.points.back()) == o.points[o.preperiod]);
        for (std::size_t k = 0; k + 1 < o.points.size(); ++k) CHECK(romik_step(o.points[k]) == o.points[k + 1]);
    }
}

TEST_CASE("inverse_branch examples and round trips") {
    CHECK(inverse_branch(Branch::Left, q(1, 3)) == q(1, 5));
    CHECK(inverse_branch(Branch::Middle, Scalar(0L)) == q(1, 2));
    CHECK(inverse_branch(Branch::Right, Scalar(0L)) == q(1, 2));
    std::mt19937_64 rng(23);
    const Scalar lo[] = {Scalar(0L), q(1, 3), q(1, 2)};
    const Scalar hi[] = {q(1, 3), q(1, 2), Scalar(1L)};
    for (int i = 0; i < 600; ++i) {
        const Scalar y = (i % 2) ? Scalar(oracle::random_rational(rng, 300)) : oracle::random_surd(rng);
        for (int b = 0; b < 3; ++b) {
            const Scalar x = inverse_branch(static_cast<Branch>(b), y);
            CHECK(lo[b] <= x);
            CHECK(x <= hi[b]);
            CHECK(romik_step(x) == y);
        }
    }
}

TEST_CASE("farey_step examples and the relation to R") {
    CHECK(farey_step(q(1, 3)) == q(1, 2));
    CHECK(farey_step(q(1, 2)) == Scalar(1L));
    CHECK(romik_step(q(1, 5)) == farey_step(farey_step(q(1, 5))));
    std::mt19937_64 rng(24);
    for (int i = 0; i < 2000; ++i) {
        const Scalar x = (i % 2) ? Scalar(oracle::random_rational(rng, 500)) : oracle::random_surd(rng);
        if (x < q(1, 2)) CHECK(romik_step(x) == farey_step(farey_step(x)));
        else CHECK(romik_step(x) == Scalar(1L) - farey_step(x));
        if (x.is_rational())
            CHECK(oracle::to_q(farey_step(x).rational()) == oracle::farey(oracle::to_q(x.rational())));
    }
}

TEST_CASE("branch images of the harmonic intervals") {
    for (long n = 3; n <= 50; ++n) {
        // [1/(n+1), 1/n) -> [1/(n-1), 1/(n-2))
        CHECK(romik_step(q(1, n + 1)) == q(1, n - 1));
        const Rational mid = (Rational(1, n + 1) + Rational(1, n)) / Rational(2);
        const Scalar img = romik_step(Scalar(mid));
        CHECK(q(1, n - 1) <= img);
        CHECK(img < q(1, n - 2));
    }
    for (long n = 1; n <= 50; ++n) {
        // [n/(n+1), (n+1)/(n+2)) -> [(n-1)/n, n/(n+1))
        CHECK(romik_step(q(n, n + 1)) == q(n - 1, n));
        CHECK(romik_step(q(n + 1, n + 2)) == q(n, n + 1));
        const Rational mid = (Rational(n, n + 1) + Rational(n + 1, n + 2)) / Rational(2);
        const Scalar img = romik_step(Scalar(mid));
        CHECK(q(n - 1, n) <= img);
        CHECK(img < q(n, n + 1));
    }
}

TEST_CASE("rational orbits end in 0 via 1/2 or in 1 via 1/3") {
    for (long b = 2; b <= 80; ++b) {
        for (long a = 1; a < b; ++a) {
            const Scalar x = q(a, b);
            const OrbitRecord o = romik_orbit(x, 10000);
            REQUIRE((o.end == OrbitEnd::Terminal0 || o.end == OrbitEnd::Terminal1));
            // Independent orbit on cpp_rational.
            Q y = oracle::to_q(x.rational());
            for (std::size_t k = 1; k < o.points.size(); ++k) {
                y = oracle::romik(y);
                CHECK(oracle::to_q(o.points[k].rational()) == y);
            }
            if (o.points.size() >= 2) {
                const Scalar& before = o.points[o.points.size() - 2];
                CHECK(before == (o.end == OrbitEnd::Terminal0 ? q(1, 2) : q(1, 3)));
            }
        }
    }
}

}  // TEST_SUITE
