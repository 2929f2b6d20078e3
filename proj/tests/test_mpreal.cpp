#include <doctest.h>

#include "thetalab/mpreal.hpp"

using namespace thetalab;

TEST_CASE("precision is sticky through arithmetic") {
    const Real a(1L, 192);
    const Real b(3L, 64);
    CHECK((a / b).prec() == 192);
    CHECK((b / a).prec() == 192);
    CHECK((a + b).prec() == 192);
    CHECK((a * 7L).prec() == 192);
    CHECK((-a).prec() == 192);
    CHECK(a.with_prec(320).prec() == 320);

    // 1/3 at 192 bits is noticeably better than at 64 bits.
    const Real fine = Real(1L, 192) / Real(3L, 192);
    const Real coarse = Real(1L, 64) / Real(3L, 64);
    const Real diff = abs(fine - coarse);
    CHECK(diff.to_double() > 1e-25);
    CHECK(diff.to_double() < 1e-18);
}

TEST_CASE("parsing and rendering decimal strings") {
    const Real x("1.25", 128);
    CHECK(x.to_double() == 1.25);
    const Real y("-3.0e2", 128);
    CHECK(y.to_double() == -300.0);
    CHECK_THROWS(Real("not-a-number", 128));

    CHECK(Real(128).str() == "0");
    CHECK(Real(1.25, 128).str(6) == "1.25000");
    CHECK(Real(-0.5, 128).str(3) == "-5.00e-1");

    // String round trip at full precision.
    const Real pi = Real::pi(256);
    const Real back(pi.str(80), 256);
    CHECK(abs(pi - back).to_double() < 1e-75);
}

TEST_CASE("frozen constants") {
    const mpfr_prec_t prec = 192;
    const Real pi_ref("3.141592653589793238462643383279502884197", prec);
    const Real gamma_ref("0.5772156649015328606065120900824024310422", prec);
    CHECK(abs(Real::pi(prec) - pi_ref).to_double() < 1e-39);
    CHECK(abs(Real::euler_gamma(prec) - gamma_ref).to_double() < 1e-39);
    CHECK(abs(exp(Real::ln2(prec)) - Real(2L, prec)).to_double() < 1e-55);
}

TEST_CASE("rounding to integers") {
    CHECK(Real(2.5, 64).round_to_mpz() == 3);   // ties away from zero
    CHECK(Real(-2.5, 64).round_to_mpz() == -3);
    CHECK(Real(2.49, 64).round_to_mpz() == 2);
    CHECK(Real(-0.2, 64).round_to_mpz() == 0);
    CHECK(Real(2.5, 64).floor_to_mpz() == 2);
    CHECK(Real(-0.2, 64).floor_to_mpz() == -1);
    CHECK(Real(7L, 64).floor_to_mpz() == 7);
}

TEST_CASE("elementary functions and comparisons") {
    const mpfr_prec_t prec = 192;
    const Real two(2L, prec);
    CHECK(abs(sqrt(two) * sqrt(two) - two).to_double() < 1e-55);
    CHECK(abs(log(exp(two)) - two).to_double() < 1e-55);
    const Real t = Real::pi(prec) / 6L;
    CHECK(abs(sin(t) - Real(0.5, prec)).to_double() < 1e-55);
    CHECK(abs(cos(t) * cos(t) + sin(t) * sin(t) - Real(1L, prec)).to_double() < 1e-55);
    CHECK(abs(atan(Real(1L, prec)) * 4L - Real::pi(prec)).to_double() < 1e-55);
    CHECK(abs(pow_si(two, -3) - Real(0.125, prec)).to_double() == 0.0);

    CHECK(Real(1L, 64) < Real(2L, 64));
    CHECK(Real(2L, 64) >= Real(2L, 64));
    CHECK(Real(-1L, 64) < 0L);
    CHECK(Real(-1L, 64).sign() == -1);
    CHECK(Real(64).is_zero());
    CHECK_FALSE(Real(64).is_nan());

    // exponent(): rough log2 magnitude.
    CHECK(Real(8L, 64).exponent() == 4);  // mpfr convention: 8 = 0.5 * 2^4
    CHECK(Real(0.125, 64).exponent() == -2);
}

TEST_CASE("complex arithmetic") {
    const mpfr_prec_t prec = 192;
    const Complex i(Real(0L, prec), Real(1L, prec));
    CHECK(abs((i * i) + Complex(1L, prec)).to_double() == 0.0);

    const Complex z(Real(3L, prec), Real(-4L, prec));
    CHECK(abs2(z).to_double() == 25.0);
    CHECK(abs(z).to_double() == 5.0);
    CHECK(abs(conj(z) - Complex(Real(3L, prec), Real(4L, prec))).to_double() == 0.0);

    // Division: z / z = 1.
    const Complex one = z / z;
    CHECK(abs(one - Complex(1L, prec)).to_double() < 1e-55);

    // cis(t) lands on the unit circle at angle t.
    const Real t = Real::pi(prec) / 3L;
    const Complex u = Complex::cis(t);
    CHECK(abs(abs2(u) - Real(1L, prec)).to_double() < 1e-55);
    CHECK(abs(u.re - Real(0.5, prec)).to_double() < 1e-55);

    CHECK(Complex(Real(1.5, 64), Real(-2L, 64)).str(4) == "1.500 - 2.000i");
}
