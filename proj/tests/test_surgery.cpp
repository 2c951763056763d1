#include <hfd/surgery.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

using namespace hfd;

TEST_CASE("Slope parsing and reduction") {
    CHECK(Slope::parse("21/2") == Slope(21, 2));
    CHECK(Slope::parse("11") == Slope(11, 1));
    CHECK(Slope(10, 2) == Slope(5, 1));
    CHECK(Slope::parse("10/2").str() == "5");
    CHECK(Slope(21, 2).str() == "21/2");
    CHECK(Slope(21, 2).is_integral() == false);

    CHECK_THROWS_AS(Slope::parse("0"), std::invalid_argument);
    CHECK_THROWS_AS(Slope::parse("-3"), std::invalid_argument);
    CHECK_THROWS_AS(Slope::parse("3/0"), std::invalid_argument);
    CHECK_THROWS_AS(Slope::parse("3/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Slope::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Slope::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Slope(0, 1), std::invalid_argument);
}

TEST_CASE("lens space d-invariants") {
    CHECK(d_lens(1, 1, 0) == Rational(0));
    CHECK(d_lens(2, 1, 0) == Rational(1, 4));
    CHECK(d_lens(2, 1, 1) == Rational(-1, 4));

    SECTION("closed form for L(p,1)") {
        for (long long p = 1; p <= 50; ++p)
            for (long long j = 0; j < p; ++j) {
                Int num = Int(p) - 2 * j;
                CHECK(d_lens(p, 1, j) == Rational(num * num, Int(4) * p) - Rational(1, 4));
            }
    }

    SECTION("h is reduced mod g") {
        for (long long i = 0; i < 11; ++i) CHECK(d_lens(11, 12, i) == d_lens(11, 1, i));
    }

    SECTION("orientation reversal, small sweep") {
        for (long long g = 2; g <= 30; ++g)
            for (long long h = 1; h < g; ++h) {
                if (gcd(g, h) != 1) continue;
                std::vector<Rational> a, b;
                for (long long i = 0; i < g; ++i) {
                    a.push_back(d_lens(g, h, i));
                    b.push_back(-d_lens(g, g - h, i));
                }
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                CHECK(a == b);
            }
    }

    SECTION("preconditions") {
        CHECK_THROWS_AS(d_lens(4, 2, 0), std::invalid_argument);
        CHECK_THROWS_AS(d_lens(5, 1, 5), std::invalid_argument);
        CHECK_THROWS_AS(d_lens(5, 1, -1), std::invalid_argument);
        CHECK_THROWS_AS(d_lens(0, 1, 0), std::invalid_argument);
        CHECK_THROWS_AS(d_lens(5, 0, 0), std::invalid_argument);
    }
}

TEST_CASE("unknot surgeries") {
    CHECK(d_unknot_surgery(1, 0) == Rational(0));
    CHECK(d_unknot_surgery(11, 0) == Rational(5, 2));
    CHECK(d_unknot_surgery(10, 5) == Rational(-1, 4));
    CHECK(d_unknot_surgery(10, -5) == Rational(-1, 4));
    CHECK_THROWS_AS(d_unknot_surgery(11, 6), std::invalid_argument);
    CHECK_THROWS_AS(d_unknot_surgery(0, 0), std::invalid_argument);
}

TEST_CASE("integral surgery formula") {
    CHECK(d_integral(KnotModel::pretzel(4), 11, 0) == Rational(-7, 2));
    CHECK(d_integral(KnotModel::pretzel(3), 11, 0) == Rational(-3, 2));

    SECTION("the unknot reduces to the lens formula") {
        KnotModel u = KnotModel::unknot();
        for (long long n : {1, 2, 7, 10})
            for (long long i = -(n - 1) / 2; 2 * i <= n; ++i)
                CHECK(d_integral(u, n, i) == d_unknot_surgery(n, i));
    }

    SECTION("canonical index set excludes -n/2 and includes n/2") {
        KnotModel k = KnotModel::pretzel(3);
        CHECK_NOTHROW(d_integral(k, 10, 5));
        CHECK_THROWS_AS(d_integral(k, 10, -5), std::invalid_argument);
        CHECK_THROWS_AS(d_integral(k, 10, 6), std::invalid_argument);
        CHECK_NOTHROW(d_integral(k, 11, -5));
        CHECK_THROWS_AS(d_integral(k, 11, 6), std::invalid_argument);
    }
}

TEST_CASE("rational surgery formula") {
    KnotModel k = KnotModel::pretzel(3);
    CHECK(d_rational(k, Slope(11, 1), 0) == Rational(-3, 2));

    // hand-unrolled: d(L(21,2),0) = 400/168 = 50/21, max{V_0, V_11} = 2
    CHECK(d_rational(k, Slope(21, 2), 0) == Rational(-34, 21));
    // i = 10: floor(10/2) = 5, -floor((10-21)/2) = 6, both V's vanish
    CHECK(d_rational(k, Slope(21, 2), 10) == Rational(-10, 21));

    SECTION("the unknot gives exactly the lens values") {
        KnotModel u = KnotModel::unknot();
        for (auto [g, h] : {std::pair<long long, long long>{7, 3}, {11, 4}, {5, 1}})
            for (long long i = 0; i < g; ++i)
                CHECK(d_rational(u, Slope(g, h), i) == d_lens(g, h, i));
    }

    SECTION("index range") {
        CHECK_THROWS_AS(d_rational(k, Slope(11, 1), 11), std::invalid_argument);
        CHECK_THROWS_AS(d_rational(k, Slope(11, 1), -1), std::invalid_argument);
    }
}

TEST_CASE("tables") {
    DInvariantTable u2 = table(KnotModel::unknot(), Slope(2, 1));
    REQUIRE(u2.entries.size() == 2);
    CHECK(u2.entries[0] == Rational(1, 4));
    CHECK(u2.entries[1] == Rational(-1, 4));
    CHECK(u2.max_d() == Rational(1, 4));

    DInvariantTable t = table(KnotModel::pretzel(3), Slope(11, 1));
    REQUIRE(t.entries.size() == 11);
    for (const Rational& d : t.entries) CHECK(d < Rational(0));

    DInvariantTable t9 = table(KnotModel::pretzel(4), Slope(11, 1));
    REQUIRE(t9.entries.size() == 11);
    for (const Rational& d : t9.entries) CHECK(d < Rational(0));
    CHECK(Rational(4) * t9.max_d() == Rational(-74, 11));
}

TEST_CASE("L-space slope test") {
    CHECK(is_lspace_slope(KnotModel::pretzel(3), Slope(11, 1)));
    CHECK(is_lspace_slope(KnotModel::pretzel(4), Slope(11, 1)));
    CHECK_FALSE(is_lspace_slope(KnotModel::pretzel(3), Slope(8, 1)));
    CHECK(is_lspace_slope(KnotModel::pretzel(3), Slope(9, 1))); // boundary 2g-1
    CHECK_FALSE(is_lspace_slope(KnotModel::pretzel(3), Slope(17, 2))); // 17/2 < 9
    CHECK(is_lspace_slope(KnotModel::unknot(), Slope(1, 5)));
    CHECK_FALSE(is_lspace_slope(
        KnotModel::from_polynomial("trefoil", parse_laurent("t - 1 + t^-1")), Slope(1, 2)));
}

TEST_CASE("integral and rational formulas agree as multisets") {
    for (long long q = 1; q <= 4; ++q) {
        KnotModel k = KnotModel::pretzel(q);
        long long g = k.genus();
        for (long long n = 2 * g - 1; n <= 2 * g + 8; ++n) {
            std::vector<Rational> integral, rational;
            for (long long i = -(n - 1) / 2; 2 * i <= n; ++i)
                integral.push_back(d_integral(k, n, i));
            for (long long i = 0; i < n; ++i) rational.push_back(d_rational(k, Slope(n, 1), i));
            std::sort(integral.begin(), integral.end());
            std::sort(rational.begin(), rational.end());
            CHECK(integral == rational);
        }
    }
}
