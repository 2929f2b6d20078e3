#include <doctest.h>

#include <random>

#include "thetalab/rational.hpp"

using namespace thetalab;

TEST_CASE("vp_integer on hand values") {
    CHECK(vp_integer(mpz_class(1), 3) == 0);
    CHECK(vp_integer(mpz_class(3), 3) == 1);
    CHECK(vp_integer(mpz_class(-27), 3) == 3);
    CHECK(vp_integer(mpz_class(49 * 3), 7) == 2);
    CHECK(vp_integer(mpz_class(1024), 2) == 10);
    CHECK(vp_integer(mpz_class(1000000), 5) == 6);
}

TEST_CASE("vp_rational: signs, zero, additivity") {
    CHECK(vp_rational(Rational(1, 49), 7) == -2);
    CHECK(vp_rational(Rational(-8, 343), 7) == -3);
    CHECK(vp_rational(Rational(-8, 343), 2) == 3);
    CHECK(vp_rational(Rational(-8, 343), 3) == 0);
    CHECK(vp_rational(Rational(0), 5) == kValInfinity);

    std::mt19937 rng(20260819);
    std::uniform_int_distribution<long> num(-5000, 5000);
    std::uniform_int_distribution<long> den(1, 5000);
    for (int i = 0; i < 400; ++i) {
        Rational a(num(rng), den(rng));
        Rational b(num(rng), den(rng));
        if (a == 0 || b == 0) continue;
        a.canonicalize();
        b.canonicalize();
        for (unsigned long p : {2ul, 3ul, 7ul}) {
            CHECK(vp_rational(a * b, p) == vp_rational(a, p) + vp_rational(b, p));
        }
    }
}

TEST_CASE("is_p_integral matches the valuation sign") {
    CHECK(is_p_integral(Rational(6, 5), 3));
    CHECK(is_p_integral(Rational(9, 5), 3));
    CHECK_FALSE(is_p_integral(Rational(5, 3), 3));
    CHECK(is_p_integral(Rational(0), 3));
    CHECK(is_p_integral(Rational(5, 3), 7));
}

TEST_CASE("rational_from_string accepts fractions and integers") {
    CHECK(rational_from_string("-3/49") == Rational(-3, 49));
    CHECK(rational_from_string("17") == Rational(17));
    CHECK(rational_from_string("0") == Rational(0));
    CHECK(rational_from_string("739/300") == Rational(739, 300));
    CHECK_THROWS(rational_from_string("x/3"));
    CHECK_THROWS(rational_from_string(""));
}

TEST_CASE("rational_str plain rendering") {
    CHECK(rational_str(Rational(-3, 49)) == "-3/49");
    CHECK(rational_str(Rational(4)) == "4");
    CHECK(rational_str(Rational(0)) == "0");
    Rational reducible(10, 4);
    reducible.canonicalize();
    CHECK(rational_str(reducible) == "5/2");
}

TEST_CASE("factored_str renders signed prime powers") {
    CHECK(factored_str(Rational(-8, 343)) == "-2^3*7^-3");
    CHECK(factored_str(Rational(1)) == "1");
    CHECK(factored_str(Rational(0)) == "0");
    CHECK(factored_str(Rational(-1)) == "-1");
    CHECK(factored_str(Rational(4, 343)) == "2^2*7^-3");
    CHECK(factored_str(Rational(15, 841)) == "3*5*29^-2");
    CHECK(factored_str(Rational(300, 11)) == "2^2*3*5^2*11^-1");
    // a factor beyond the trial-division limit is kept verbatim
    const Rational big(mpz_class("2305843009213693951"));  // prime > 10^6
    const std::string s = factored_str(big, 1000);
    CHECK(s.find("2305843009213693951") != std::string::npos);
}

TEST_CASE("to_real rounds at the requested precision") {
    const Real x = to_real(Rational(1, 3), 192);
    CHECK(x.prec() == 192);
    const Real three = Real(3L, 192);
    const Real diff = x * three - Real(1L, 192);
    CHECK(diff.to_double() == doctest::Approx(0.0).epsilon(1e-40));
}
