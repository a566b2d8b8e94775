#include "lspace/exact.hpp"

#include <catch_amalgamated.hpp>

using namespace lspace;

TEST_CASE("sawtooth") {
    CHECK(sawtooth(make_rational(1, 3)) == make_rational(-1, 6));
    CHECK(sawtooth(Rational(2)) == 0);
    CHECK(sawtooth(make_rational(-1, 4)) == make_rational(1, 4));
    CHECK(sawtooth(Rational(0)) == 0);
    // odd symmetry at non-integers
    for (int n = -7; n <= 7; ++n)
        for (int d = 2; d <= 9; ++d)
            if (n % d != 0)
                CHECK(sawtooth(make_rational(n, d)) == -sawtooth(make_rational(-n, d)));
}

TEST_CASE("dedekind sum values") {
    CHECK(dedekind_sum(1, 2) == 0);
    CHECK(dedekind_sum(1, 3) == make_rational(1, 18));
    CHECK(dedekind_sum(2, 5) == 0);
    CHECK(dedekind_sum(3, 7) == make_rational(-1, 14));
    CHECK(dedekind_sum(5, 12) == make_rational(-1, 72));
    CHECK_THROWS_AS(dedekind_sum(2, 4), precondition_error);
    CHECK_THROWS_AS(dedekind_sum(3, 0), precondition_error);
}

TEST_CASE("6p s(q,p) is an integer for all coprime pairs, p <= 200") {
    for (Int p = 1; p <= 200; ++p)
        for (Int q = 1; q <= p; ++q) {
            if (gcd_int(p, q) != 1) continue;
            Rational v = dedekind_sum(q, p) * 6 * p;
            REQUIRE(is_integer(v));
        }
}

TEST_CASE("Dedekind reciprocity for 1 <= q < p <= 100") {
    for (Int p = 2; p <= 100; ++p)
        for (Int q = 1; q < p; ++q) {
            if (gcd_int(p, q) != 1) continue;
            Rational lhs = dedekind_sum(q, p) + dedekind_sum(p, q);
            Rational rhs = make_rational(-1, 4) +
                           (make_rational(p, q) + make_rational(q, p) +
                            make_rational(1, p * q)) /
                               12;
            REQUIRE(lhs == rhs);
        }
}

TEST_CASE("continued fraction expansion") {
    CHECK(cf_expand(5, 2) == std::vector<Int>{2, 2});
    CHECK(cf_expand(7, 3) == std::vector<Int>{2, 3});
    CHECK(cf_expand(9, 1) == std::vector<Int>{9});
    CHECK_THROWS_AS(cf_expand(5, 5), precondition_error);
    CHECK_THROWS_AS(cf_expand(6, 4), precondition_error);
    CHECK_THROWS_AS(cf_expand(5, 0), precondition_error);
}

TEST_CASE("continued fraction evaluation") {
    CHECK(cf_evaluate({2, 2}) == std::pair<Int, Int>{5, 2});
    CHECK(cf_evaluate({7}) == std::pair<Int, Int>{7, 1});
    CHECK_THROWS_AS(cf_evaluate({}), precondition_error);
    CHECK_THROWS_AS(cf_evaluate({2, 0}), precondition_error);
}

TEST_CASE("cf round-trip over all 0 < q < p <= 100") {
    for (Int p = 2; p <= 100; ++p)
        for (Int q = 1; q < p; ++q) {
            if (gcd_int(p, q) != 1) continue;
            auto terms = cf_expand(p, q);
            REQUIRE(terms.back() >= 2);
            for (const auto& a : terms) REQUIRE(a >= 1);
            REQUIRE(cf_evaluate(terms) == std::pair<Int, Int>{p, q});
        }
}

TEST_CASE("is_square_mod") {
    CHECK(is_square_mod(-1, 5));
    CHECK_FALSE(is_square_mod(-1, 3));
    CHECK(is_square_mod(0, 7));
    CHECK(is_square_mod(0, 1));
    CHECK(is_square_mod(4, 12));
    CHECK_FALSE(is_square_mod(2, 4));
}

TEST_CASE("unit_square_orbit") {
    auto as_set = [](std::initializer_list<int> xs) {
        std::set<Int> s;
        for (int x : xs) s.insert(x);
        return s;
    };
    CHECK(unit_square_orbit(1, 5) == as_set({1, 4}));
    CHECK(unit_square_orbit(2, 5) == as_set({2, 3}));
    CHECK(unit_square_orbit(3, 2) == as_set({1}));
    CHECK(unit_square_orbit(4, 2) == as_set({0}));
    CHECK(unit_square_orbit(1, 12) == as_set({1}));
}

TEST_CASE("is_square_mod agrees with the orbit-based oracle for p <= 500") {
    for (Int p = 1; p <= 500; ++p) {
        // squares = unit squares union squares of non-units
        std::set<Int> squares = unit_square_orbit(1, p);
        for (Int v = 0; v < p; ++v)
            if (gcd_int(v, p) != 1) squares.insert(v * v % p);
        if (p == 1) squares.insert(0);
        for (Int a = 0; a < p; ++a)
            REQUIRE(is_square_mod(a, p) == (squares.count(a) > 0));
        if (p == 1) REQUIRE(is_square_mod(0, p));
    }
}

TEST_CASE("inverse_mod") {
    for (Int p = 1; p <= 60; ++p)
        for (Int a = 1; a < p; ++a) {
            if (gcd_int(a, p) != 1) continue;
            Int inv = inverse_mod(a, p);
            REQUIRE(a * inv % p == 1 % p);
        }
    CHECK_THROWS_AS(inverse_mod(2, 4), precondition_error);
}
