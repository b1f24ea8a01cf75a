#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ellinv/rational.hpp"

using namespace ellinv;

TEST_CASE("doubles convert exactly") {
    CHECK(rational_from_double(0.5) == Rational(1, 2));
    CHECK(rational_from_double(-0.75) == Rational(-3, 4));
    CHECK(rational_from_double(3.0) == Rational(3));
    // 0.1 is not 1/10 in binary; the conversion must keep the true value
    CHECK(rational_from_double(0.1) ==
          Rational(BigInt("3602879701896397"), BigInt("36028797018963968")));
    CHECK_THROWS_AS(rational_from_double(std::nan("")), InvalidSpecError);
    CHECK_THROWS_AS(rational_from_double(INFINITY), InvalidSpecError);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 20000; ++i) {
        double v = std::ldexp(u(rng), static_cast<int>(rng() % 40) - 20);
        CHECK(to_double(rational_from_double(v)) == v);
    }
}

TEST_CASE("decimal strings convert exactly") {
    CHECK(rational_from_string("0.25") == Rational(1, 4));
    CHECK(rational_from_string("-0.1") == Rational(-1, 10));
    CHECK(rational_from_string("2.5e-1") == Rational(1, 4));
    CHECK(rational_from_string("1e3") == Rational(1000));
    CHECK(rational_from_string("7") == Rational(7));
    CHECK(rational_from_string("-3/4") == Rational(-3, 4));
    CHECK(rational_from_string("10/15") == Rational(2, 3));
    CHECK(rational_from_string("  2/3 ") == Rational(2, 3));
    CHECK(rational_from_string("10.2416") == Rational(64010, 6250));
    // leading zeros stay decimal, never octal or hex
    CHECK(rational_from_string("007") == Rational(7));
    CHECK(rational_from_string("0.250") == Rational(1, 4));
    CHECK(rational_from_string("1/010") == Rational(1, 10));
    CHECK(rational_from_string("-010/4") == Rational(-5, 2));
}

TEST_CASE("malformed strings are rejected") {
    CHECK_THROWS_AS(rational_from_string(""), ParseError);
    CHECK_THROWS_AS(rational_from_string("abc"), ParseError);
    CHECK_THROWS_AS(rational_from_string("1..2"), ParseError);
    CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rational_from_string("0x10"), ParseError);
    CHECK_THROWS_AS(rational_from_string("1/0x10"), ParseError);
    CHECK_THROWS_AS(rational_from_string("1/"), ParseError);
    CHECK_THROWS_AS(rational_from_string("2e"), ParseError);
    CHECK_THROWS_AS(rational_from_string("--3"), ParseError);
}

TEST_CASE("text form round-trips") {
    CHECK(to_string(Rational(-3, 4)) == "-3/4");
    CHECK(to_string(Rational(5)) == "5");
    std::mt19937_64 rng(9);
    for (int i = 0; i < 5000; ++i) {
        auto num = static_cast<long long>(rng() % 2000001) - 1000000;
        auto den = static_cast<long long>(rng() % 999) + 1;
        Rational r(num, den);
        CHECK(rational_from_string(to_string(r)) == r);
    }
}
