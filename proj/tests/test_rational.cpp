#include <doctest.h>

#include <muharm/rational.hpp>

#include <stdexcept>

using namespace muharm;

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(7, 3) - Rational(1, 3) == Rational(2));
    CHECK((Rational(1) / Rational(3)).str() == "1/3");
    CHECK(Rational(-7).str() == "-7");
    CHECK(Rational(0).is_zero());
    CHECK(Rational(4, 2).is_integer());
    CHECK(Rational(-5, 3).sign() == -1);
    CHECK(Rational(-5, 3).abs() == Rational(5, 3));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("rational string round-trip") {
    CHECK(Rational::from_string("22/7") == Rational(22, 7));
    CHECK(Rational::from_string("-3") == Rational(-3));
    CHECK(Rational::from_string(Rational(-9, 12).str()) == Rational(-3, 4));
}

TEST_CASE("generalized binomial coefficients") {
    // integer upper index: usual values, zero past the top
    CHECK(binomial(Rational(3), 2) == Rational(3));
    CHECK(binomial(Rational(3), 4) == Rational(0));
    CHECK(binomial(Rational(5), 0) == Rational(1));
    CHECK(binomial(Rational(6), 3) == Rational(20));
    // negative upper index
    CHECK(binomial(Rational(-1), 3) == Rational(-1));
    CHECK(binomial(Rational(-1), 4) == Rational(1));
    CHECK(binomial(Rational(-2), 2) == Rational(3));
    CHECK(binomial(Rational(-3), 3) == Rational(-10));
    // half-integer upper index
    CHECK(binomial(Rational(1, 2), 0) == Rational(1));
    CHECK(binomial(Rational(1, 2), 1) == Rational(1, 2));
    CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(binomial(Rational(1, 2), 3) == Rational(1, 16));
    CHECK(binomial(Rational(0), 0) == Rational(1));
    CHECK(binomial(Rational(2), -1) == Rational(0));
}

TEST_CASE("binomial satisfies the Pascal recurrence for rational upper index") {
    for (int num = -5; num <= 5; ++num) {
        Rational a(num, 3);
        for (int k = 1; k <= 6; ++k)
            CHECK(binomial(a, k) == binomial(a - Rational(1), k) + binomial(a - Rational(1), k - 1));
    }
}
