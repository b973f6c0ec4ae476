#include "oracle.hpp"

#include "romik/errors.hpp"
#include "romik/io.hpp"

#include <doctest.h>

using namespace romik;

TEST_SUITE("io") {

TEST_CASE("parse_scalar accepts rationals and surd expressions") {
    CHECK(parse_scalar("78/497") == Scalar(Rational(78, 497)));
    CHECK(parse_scalar(" 3 ") == Scalar(Rational(3)));
    CHECK(parse_scalar("-2/4") == Scalar(Rational(-1, 2)));
    CHECK(parse_scalar("(sqrt(5)-1)/2") == surd_canonicalize(-1, 1, 5, 2));
    CHECK(parse_scalar("sqrt(8)/4") == surd_canonicalize(0, 1, 2, 2));
    CHECK(parse_scalar("sqrt(9)") == Scalar(Rational(3)));
    CHECK(parse_scalar("1/(1+sqrt(2))") == surd_canonicalize(-1, 1, 2, 1));
    CHECK(parse_scalar("2*(3-1)/8") == Scalar(Rational(1, 2)));
    const Scalar lit = parse_scalar("(250*sqrt(5)-250)/1969");
    CHECK(abs(oracle::to_f(lit) - oracle::F("0.156941083989")) < oracle::F("1e-12"));
}

TEST_CASE("parse_scalar errors") {
    for (const char* bad : {"", "abc", "1/0", "1/", "(1", "1)", "sqrt(-2)", "sqrt(2)+sqrt(3)", "1 2", "1/2x"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_scalar(bad), ParseError);
    }
    CHECK_THROWS_AS(parse_rational("sqrt(2)"), ParseError);
    CHECK(parse_rational("6/4") == Rational(3, 2));
}

TEST_CASE("parse_rcf round trips through str") {
    for (const char* s : {"[0;6,2,1,2,4,1,1]", "[0;4,(2,1,2,4,1,1,6)]", "[0;(2)]", "[0]", "[2;3]", "[0;1,1,(2)]"}) {
        CAPTURE(s);
        CHECK(parse_rcf(s).str() == s);
    }
    const RcfExpansion e = parse_rcf("[0; 1 , (2,3) ]");
    CHECK(e.pre == std::vector<Integer>{1});
    CHECK(*e.period == std::vector<Integer>{2, 3});
    for (const char* bad : {"[0;0]", "[0;-2]", "0;2", "[0;2", "[0;2]]", "[0,2]", "[0;(2),3]", "[0;()]"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_rcf(bad), ParseError);
    }
}

TEST_CASE("signed continued fractions and Romik terms") {
    const SignedCF cf = parse_signed_cf("[0;2,-1/3,0,1/4]");
    REQUIRE(cf.terms.size() == 4);
    CHECK(cf.terms[1].c == -1);
    CHECK(cf.terms[1].d == 3);
    CHECK(cf.terms[2].c == 1);
    CHECK(cf.terms[2].d == 0);
    CHECK(cf.str() == "[0;2,-1/3,0,4]");
    CHECK_THROWS_AS(parse_signed_cf("[0;2/3]"), ParseError);
    CHECK_THROWS_AS(parse_signed_cf("[0;-2]"), ParseError);

    const auto terms = parse_romik_terms("[0;1/2,1/0,-1/2]");
    CHECK(terms == std::vector<RomikTerm>{{1, 2}, {1, 0}, {-1, 2}});
    CHECK_THROWS_AS(parse_romik_terms("[1;1/2]"), ParseError);
}

TEST_CASE("parse_digit_pairs") {
    CHECK(parse_digit_pairs("(-1,1),(1,-1)") == std::vector<DigitPair>{{-1, 1}, {1, -1}});
    CHECK(parse_digit_pairs("[(1,1)]") == std::vector<DigitPair>{{1, 1}});
    CHECK(parse_digit_pairs("").empty());
    CHECK_THROWS_AS(parse_digit_pairs("(1,1"), ParseError);
    CHECK_THROWS_AS(parse_digit_pairs("(1;1)"), ParseError);
}

TEST_CASE("integers switch to strings past 64 bits") {
    CHECK(integer_json(Integer(42)).is_number_integer());
    CHECK(integer_json(Integer("9223372036854775807")).is_number_integer());
    const json big = integer_json(Integer("9223372036854775808"));
    REQUIRE(big.is_string());
    CHECK(big.get<std::string>() == "9223372036854775808");
}

TEST_CASE("JSON shapes") {
    CHECK(json(Rational(78, 497)) == "78/497");
    CHECK(json(Scalar(Rational(1, 2))) == "1/2");
    const json s = surd_canonicalize(-1, 1, 5, 2);
    CHECK(s == json{{"a", -1}, {"e", 1}, {"d", 5}, {"c", 2}});
    CHECK(json(parse_rcf("[0;4,(2,1)]")) == json::parse(R"({"a0":0,"pre":[4],"period":[2,1]})"));
    CHECK(json(parse_rcf("[0;2]"))["period"].is_null());
    CHECK(json(RomikTerm{-1, 2}) == json::parse(R"({"rho":-1,"a":2})"));
    CHECK(json(parse_signed_cf("[0;2,-1/3]")) == "[0;2,-1/3]");
    CHECK(json(OpenInterval{Rational(1, 3), Rational(2, 3)}) == json::parse(R"(["1/3","2/3"])"));
    CHECK(json(RationalRect{0, Rational(1, 2), Rational(1, 3), 1}) == json::parse(R"(["0/1","1/2","1/3","1/1"])"));

    const json orbit = romik_orbit(Scalar(Rational(2, 5)), 10);
    CHECK(orbit["end"] == "terminal0");
    CHECK(orbit["points"] == json::parse(R"(["2/5","1/2","0/1"])"));
    CHECK(orbit["period"].is_null());

    RatioExperiment r;
    r.seed = 1;
    r.iterations = 5;
    r.f_set = {Rational(1, 2), Rational(2, 3)};
    r.g_set = {Rational(1, 3), Rational(2, 3)};
    CHECK(json(r)["ratio"].is_null());
    r.ratio = 0.5;
    CHECK(json(r)["ratio"] == 0.5);
}

}  // TEST_SUITE
