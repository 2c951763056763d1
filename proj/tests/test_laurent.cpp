#include <hfd/laurent.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace hfd;

namespace {

const char* kP237 = "t^5 - t^4 + t^2 - t + 1 - t^-1 + t^-2 - t^-4 + t^-5";

LaurentPoly p237() {
    LaurentPoly p;
    for (long long e : {5, 2, 0, -2, -5}) p.add_term(e, 1);
    for (long long e : {4, 1, -1, -4}) p.add_term(e, -1);
    return p;
}

} // namespace

TEST_CASE("parse") {
    CHECK(parse_laurent(kP237) == p237());

    LaurentPoly one = parse_laurent("1");
    CHECK(one.coeff(0) == 1);
    CHECK(one.degree_top() == 0);
    CHECK(one.degree_bottom() == 0);

    SECTION("cancellation drops zero terms") {
        LaurentPoly p = parse_laurent("t^2 - t^2 + 3");
        CHECK(p == parse_laurent("3"));
        CHECK(p.terms().size() == 1);
    }

    SECTION("whitespace and '*' are optional") {
        CHECK(parse_laurent("3*t^-2+1") == parse_laurent(" 3 * t ^ - 2 + 1 "));
        CHECK(parse_laurent("2t^3") == parse_laurent("2*t^3"));
        CHECK(parse_laurent("t") == parse_laurent("t^1"));
        CHECK(parse_laurent("-t^2+t") == parse_laurent("t - t^2"));
    }

    SECTION("like terms combine silently") {
        CHECK(parse_laurent("t + t + 1") == parse_laurent("2*t + 1"));
    }

    SECTION("the zero polynomial") {
        CHECK(parse_laurent("0").is_zero());
        CHECK(parse_laurent("t - t").is_zero());
        CHECK_THROWS_AS(parse_laurent("0").degree_top(), std::domain_error);
    }
}

TEST_CASE("parse errors carry the position") {
    try {
        parse_laurent("t^");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.position() == 2);
    }
    try {
        parse_laurent("");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.position() == 0);
    }
    CHECK_THROWS_AS(parse_laurent("t t"), parse_error);
    CHECK_THROWS_AS(parse_laurent("5*"), parse_error);
    CHECK_THROWS_AS(parse_laurent("5*x"), parse_error);
    CHECK_THROWS_AS(parse_laurent("+"), parse_error);
    CHECK_THROWS_AS(parse_laurent("t^x"), parse_error);
    CHECK_THROWS_AS(parse_laurent("2**t"), parse_error);
    CHECK_THROWS_AS(parse_laurent("t^99999999999"), parse_error);
}

TEST_CASE("eval_at_one") {
    CHECK(parse_laurent(kP237).eval_at_one() == 1);
    CHECK(parse_laurent("1").eval_at_one() == 1);
    CHECK(parse_laurent("t - 1").eval_at_one() == 0);
    CHECK(parse_laurent("0").eval_at_one() == 0);
}

TEST_CASE("is_symmetric") {
    // P(-2,3,9): the q = 4 member of the pretzel family
    CHECK(parse_laurent("t^6 - t^5 + t^3 - t^2 + t - 1 + t^-1 - t^-2 + t^-3 - t^-5 + t^-6")
              .is_symmetric());
    CHECK(parse_laurent(kP237).is_symmetric());
    CHECK_FALSE(parse_laurent("t - 1").is_symmetric());
    CHECK(parse_laurent("1").is_symmetric());
    CHECK(parse_laurent("0").is_symmetric());
}

TEST_CASE("tail sums") {
    LaurentPoly p = p237();
    CHECK(p.tail_sum(5) == 1);
    CHECK(p.tail_sum(2) == 1); // 1 + 0 - 1 + 1
    CHECK(p.tail_sum(6) == 0);
    CHECK(p.tail_sum(100) == 0);
    CHECK(p.tail_sum(-5) == p.eval_at_one());
    CHECK(p.tail_sum(-100) == p.eval_at_one());
}

TEST_CASE("canonical printing") {
    CHECK(p237().str() == kP237);
    CHECK(parse_laurent("1").str() == "1");
    CHECK(parse_laurent("0").str() == "0");
    CHECK(parse_laurent("-2*t^3 + t - 4").str() == "-2*t^3 + t - 4");
    CHECK(parse_laurent("- t").str() == "-t");
}

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 8), expo(-10, 10), coeff(-5, 5);
    LaurentPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) p.add_term(expo(rng), coeff(rng));
    return p;
}

} // namespace

TEST_CASE("parse(print(p)) = p and the telescoping identity, random polynomials") {
    std::mt19937 rng(987654);
    for (int trial = 0; trial < 500; ++trial) {
        LaurentPoly p = random_poly(rng);
        CHECK(parse_laurent(p.str()) == p);
        for (long long i = -12; i <= 12; ++i)
            CHECK(p.tail_sum(i) - p.tail_sum(i + 1) == p.coeff(i));
    }
}
