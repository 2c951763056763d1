#include <hfd/rational.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace hfd;

TEST_CASE("construction reduces to lowest terms") {
    Rational r(121, 44);
    CHECK(r.numerator() == 11);
    CHECK(r.denominator() == 4);
    CHECK(r == Rational(11, 4));

    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(0, 17) == Rational(0));
    CHECK(Rational(0).denominator() == 1);
    CHECK_THROWS_AS(Rational(3, 0), std::domain_error);
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 4) + Rational(-1, 4) == Rational(0));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(3, 4) - Rational(1, 4) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(5, 6) == Rational(-5, 6));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("ordering") {
    CHECK(Rational(-37, 22) < Rational(10, 11));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(7) > Rational(13, 2));
}

TEST_CASE("text forms") {
    CHECK(Rational(11, 4).str() == "11/4");
    CHECK(Rational(11, 4).fraction_str() == "11/4");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(5).fraction_str() == "5/1");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(0).fraction_str() == "0/1");
}

TEST_CASE("values beyond 64 bits stay exact") {
    Int big = 1;
    for (int i = 0; i < 30; ++i) big *= 10;
    big += 1; // 10^30 + 1, odd and not divisible by 3
    Rational r(big, Int(3));
    CHECK(r.numerator() == big);
    CHECK(r.denominator() == 3);
    CHECK(r * Rational(3) == Rational(big));
    CHECK(Rational(big) + Rational(1) > Rational(big));
}

namespace {

// independent fraction oracle on small values, compared via cross products
struct Frac {
    long long n, d;
};

bool same(const Frac& f, const Rational& r) {
    return Int(f.n) * r.denominator() == r.numerator() * f.d;
}

} // namespace

TEST_CASE("random arithmetic matches a naive fraction oracle") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long long> num(-20, 20), den(1, 20);
    for (int trial = 0; trial < 2000; ++trial) {
        long long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        Rational x(a, b), y(c, d);
        CHECK(same(Frac{a * d + c * b, b * d}, x + y));
        CHECK(same(Frac{a * d - c * b, b * d}, x - y));
        CHECK(same(Frac{a * c, b * d}, x * y));
        CHECK((x + y) - y == x);
        // ordering consistent with cross multiplication
        CHECK((x < y) == (a * d < c * b));
    }
}
