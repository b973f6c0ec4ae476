#include "oracle.hpp"

#include "romik/errors.hpp"
#include "romik/io.hpp"
#include "romik/maps.hpp"
#include "romik/mobius.hpp"

#include <doctest.h>

using namespace romik;
using oracle::F;

namespace {

const Scalar kGolden = surd_canonicalize(-1, 1, 5, 2);
const Scalar kLiteral = parse_scalar("(250*sqrt(5)-250)/1969");

Mobius random_unimodular(std::mt19937_64& rng) {
    static const Mobius gens[] = {{1, 1, 0, 1}, {1, -1, 0, 1}, {0, 1, 1, 0}, {1, 0, 2, 1}, {2, -1, 1, 0}};
    std::uniform_int_distribution<int> pick(0, 4), len(1, 8);
    Mobius m;
    for (int i = len(rng); i > 0; --i) m = m * gens[pick(rng)];
    return m;
}

}  // namespace

TEST_SUITE("exact_numbers") {

TEST_CASE("rationals are stored reduced with a positive denominator") {
    const Rational r(Integer(6), Integer(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rational(0).str() == "0/1");
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), ZeroDenominator);
}

TEST_CASE("mobius_apply examples") {
    CHECK(mobius_apply({1, 0, -2, 1}, Scalar(Rational(1, 5))) == Scalar(Rational(1, 3)));
    CHECK(mobius_apply(Mobius::identity(), kGolden) == kGolden);
    CHECK(mobius_apply({0, 1, 1, 2}, Scalar(0L)) == Scalar(Rational(1, 2)));
    CHECK_THROWS_AS(mobius_apply({0, 1, 1, 2}, Scalar(-2L)), PoleError);
}

TEST_CASE("mobius_compose examples") {
    CHECK(mobius_compose({0, 1, 1, 2}, {0, 1, 1, 0}) == Mobius{1, 0, 2, 1});
    const Mobius m{2, -1, 1, 0};
    CHECK(mobius_compose(m, Mobius::identity()) == m);
}

TEST_CASE("composition matches brute-force integer products and is associative") {
    std::mt19937_64 rng(11);
    auto brute = [](const Mobius& a, const Mobius& b) {
        using oracle::to_z;
        const oracle::Z r[4] = {to_z(a.m11) * to_z(b.m11) + to_z(a.m12) * to_z(b.m21),
                                to_z(a.m11) * to_z(b.m12) + to_z(a.m12) * to_z(b.m22),
                                to_z(a.m21) * to_z(b.m11) + to_z(a.m22) * to_z(b.m21),
                                to_z(a.m21) * to_z(b.m12) + to_z(a.m22) * to_z(b.m22)};
        return std::vector<oracle::Z>(r, r + 4);
    };
    for (int i = 0; i < 300; ++i) {
        const Mobius a = random_unimodular(rng), b = random_unimodular(rng), c = random_unimodular(rng);
        const Mobius ab = a * b;
        const auto want = brute(a, b);
        CHECK(oracle::to_z(ab.m11) == want[0]);
        CHECK(oracle::to_z(ab.m12) == want[1]);
        CHECK(oracle::to_z(ab.m21) == want[2]);
        CHECK(oracle::to_z(ab.m22) == want[3]);
        CHECK((a * b) * c == a * (b * c));
        const Integer d = ab.det();
        CHECK(abs(d) == 1);
    }
}

TEST_CASE("apply of a composition is the composition of applies") {
    std::mt19937_64 rng(12);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        const Mobius a = random_unimodular(rng), b = random_unimodular(rng);
        const Scalar x = (i % 2) ? Scalar(oracle::random_rational(rng, 50)) : oracle::random_surd(rng);
        try {
            const Scalar lhs = mobius_apply(a * b, x);
            if ((Scalar(Rational(b.m21)) * x + Scalar(Rational(b.m22))).is_zero()) {
                // b sends x to infinity, and a sends infinity to a11/a21.
                CHECK(lhs == Scalar(Rational(a.m11, a.m21)));
            } else {
                CHECK(lhs == mobius_apply(a, mobius_apply(b, x)));
            }
            ++checked;
        } catch (const PoleError&) {
        }
    }
    CHECK(checked > 250);
}

TEST_CASE("matrices built by the library are unimodular") {
    for (Branch b : {Branch::Left, Branch::Middle, Branch::Right}) {
        CHECK(abs(branch_matrix(b).det()) == 1);
        CHECK(abs(inverse_branch_matrix(b).det()) == 1);
        CHECK(branch_matrix(b) * inverse_branch_matrix(b) == Mobius::identity());
    }
}

TEST_CASE("surd_canonicalize examples") {
    const Scalar s = surd_canonicalize(2, 1, 8, 4);
    REQUIRE(s.is_surd());
    CHECK(s.surd().a() == 1);
    CHECK(s.surd().e() == 1);
    CHECK(s.surd().d() == 2);
    CHECK(s.surd().c() == 2);
    CHECK(surd_canonicalize(0, 0, 5, 7) == Scalar(0L));
    CHECK(surd_canonicalize(3, 2, 9, 5) == Scalar(Rational(9, 5)));
    REQUIRE(kGolden.is_surd());
    CHECK(kGolden.surd().a() == -1);
    CHECK(kGolden.surd().e() == 1);
    CHECK(kGolden.surd().d() == 5);
    CHECK(kGolden.surd().c() == 2);
    CHECK(surd_canonicalize(1, 1, 5, -2) == surd_canonicalize(-1, -1, 5, 2));
    CHECK_THROWS_AS(surd_canonicalize(1, 1, 5, 0), ZeroDenominator);
    CHECK_THROWS_AS(surd_canonicalize(1, 1, -5, 2), OutOfDomain);
}

TEST_CASE("canonicalize is idempotent and keeps the value") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> coef(-500, 500), dd(0, 400);
    for (int i = 0; i < 2000; ++i) {
        long c = coef(rng);
        if (c == 0) c = 7;
        const long a = coef(rng), e = coef(rng), d = dd(rng);
        const Scalar s = surd_canonicalize(a, e, d, c);
        const F want = (F(a) + F(e) * sqrt(F(d))) / F(c);
        CHECK(abs(oracle::to_f(s) - want) < F("1e-80"));
        if (s.is_surd()) {
            const QuadSurd& q = s.surd();
            CHECK(q.c() > 0);
            CHECK(gcd(gcd(q.a(), q.e()), q.c()) == 1);
            CHECK(squarefree_decompose(q.d()).first == 1);
            CHECK(surd_canonicalize(q.a(), q.e(), q.d(), q.c()) == s);
        }
    }
}

TEST_CASE("squarefree_decompose against brute force") {
    // A small prime to the first power next to a large square.
    CHECK(squarefree_decompose(Integer(21 * 179 * 179)) == std::pair<Integer, Integer>{179, 21});
    CHECK(squarefree_decompose(Integer(2 * 2 * 2 * 3 * 25)) == std::pair<Integer, Integer>{10, 6});
    CHECK(squarefree_decompose(Integer(1)) == std::pair<Integer, Integer>{1, 1});
    for (long n = 1; n <= 20000; ++n) {
        long f = 1;
        for (long k = 2; k * k <= n; ++k)
            if (n % (k * k) == 0) f = k;
        const auto [gf, gk] = squarefree_decompose(Integer(n));
        CHECK(gf == f);
        CHECK(gk == n / (f * f));
    }
    std::mt19937_64 rng(14);
    std::uniform_int_distribution<long> big(1000, 100000), small(1, 60);
    for (int i = 0; i < 200; ++i) {
        const Integer p = big(rng), k = small(rng);
        const auto [gf, gk] = squarefree_decompose(p * p * k);
        CHECK(gf * gf * gk == p * p * k);
        CHECK(squarefree_decompose(gk).first == 1);
    }
}

TEST_CASE("compare examples") {
    CHECK(compare(kGolden, Scalar(Rational(1, 2))) == std::strong_ordering::greater);
    CHECK(compare(Scalar(Rational(1, 3)), Scalar(Rational(1, 3))) == std::strong_ordering::equal);
    CHECK(compare(kLiteral, Scalar(Rational(1, 6))) == std::strong_ordering::less);
}

TEST_CASE("compare agrees with 100-digit floats on random surds") {
    std::mt19937_64 rng(14);
    const auto& ds = oracle::squarefree_radicands();
    std::uniform_int_distribution<long> ac(-1000, 1000), cc(1, 1000), ee(-50, 50);
    std::uniform_int_distribution<std::size_t> pick(0, ds.size() - 1);
    int disagreements = 0;
    for (int i = 0; i < 10000; ++i) {
        const long d = ds[pick(rng)];
        const Scalar x = surd_canonicalize(ac(rng), ee(rng), d, cc(rng));
        // Same radicand, or a rational; both are comparable exactly.
        const Scalar y = (i % 2) ? surd_canonicalize(ac(rng), ee(rng), d, cc(rng))
                                 : Scalar(Rational(ac(rng), cc(rng)));
        const F diff = oracle::to_f(x) - oracle::to_f(y);
        const auto got = compare(x, y);
        if (abs(diff) < F("1e-60")) {
            if (got != std::strong_ordering::equal) ++disagreements;
        } else if ((diff < 0) != (got == std::strong_ordering::less)) {
            ++disagreements;
        }
        CHECK((got == std::strong_ordering::equal) == (x == y));
    }
    CHECK(disagreements == 0);
}

TEST_CASE("field arithmetic matches high-precision evaluation") {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 500; ++i) {
        const Scalar x = oracle::random_surd(rng);
        const auto d = x.radicand();
        const Scalar y = make_surd_squarefree(static_cast<long>(rng() % 200) - 100,
                                              static_cast<long>(rng() % 20) + 1, *d,
                                              static_cast<long>(rng() % 90) + 1);
        const F fx = oracle::to_f(x), fy = oracle::to_f(y), eps("1e-70");
        CHECK(abs(oracle::to_f(x + y) - (fx + fy)) < eps);
        CHECK(abs(oracle::to_f(x - y) - (fx - fy)) < eps);
        CHECK(abs(oracle::to_f(x * y) - (fx * fy)) < eps);
        if (!y.is_zero()) CHECK(abs(oracle::to_f(x / y) - (fx / fy)) < F("1e-60"));
        CHECK(oracle::to_z(floor(x)) == oracle::Z(floor(fx)));
        CHECK(oracle::to_z(floor(y)) == oracle::Z(floor(fy)));
    }
}

TEST_CASE("surds with different radicands do not mix") {
    const Scalar r2 = surd_canonicalize(0, 1, 2, 2);
    CHECK_THROWS_AS(r2 + kGolden, MixedDiscriminant);
    CHECK_THROWS_AS(Scalar(1L) / Scalar(0L), ZeroDenominator);
}

TEST_CASE("serialization of numbers") {
    CHECK(json(Rational(3, 4)).get<std::string>() == "3/4");
    const json g = kGolden;
    CHECK(g == json{{"a", -1}, {"e", 1}, {"d", 5}, {"c", 2}});
    const Integer big("123456789012345678901234567890");
    CHECK(integer_json(big) == json("123456789012345678901234567890"));
    CHECK(integer_json(Integer(42)) == json(42));
    CHECK(kGolden.str() == "(-1+sqrt(5))/2");
}

}  // TEST_SUITE
