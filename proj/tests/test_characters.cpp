#include <doctest.h>

#include "thetalab/characters.hpp"

using namespace thetalab;

TEST_CASE("make_setup: validation and generator conventions") {
    // Conventional generator table entries.
    CHECK(make_setup(3, 7).gen == 3);
    CHECK(make_setup(3, 13).gen == 2);
    CHECK(make_setup(3, 19).gen == 2);
    CHECK(make_setup(3, 31).gen == 3);
    CHECK(make_setup(5, 11).gen == 2);
    CHECK(make_setup(5, 31).gen == 3);
    CHECK(make_setup(7, 29).gen == 2);
    // Fallback: smallest primitive root (3 is the smallest mod 43).
    CHECK(make_setup(3, 43).gen == 3);
    CHECK(make_setup(3, 7, 5ul).gen == 5);

    CHECK_THROWS(make_setup(3, 11));      // q != 1 mod p
    CHECK_THROWS(make_setup(4, 13));      // p not prime
    CHECK_THROWS(make_setup(3, 21));      // q not prime
    CHECK_THROWS(make_setup(3, 7, 2ul));  // 2^3 = 1 mod 7: not a primitive root
    CHECK_THROWS(make_setup(3, 7, 0ul));
}

TEST_CASE("discrete log table is exact") {
    const auto setup = make_setup(3, 7);  // gen 3
    CHECK(setup.dlog.size() == 7);
    CHECK(setup.dlog[0] == -1);
    CHECK(setup.dlog[1] == 0);
    CHECK(setup.dlog[3] == 1);
    CHECK(setup.dlog[2] == 2);  // 3^2 = 2 (mod 7)
    CHECK(setup.dlog[6] == 3);
    CHECK(setup.dlog[4] == 4);
    CHECK(setup.dlog[5] == 5);
    // Every setup: gen^dlog[n] = n (mod q).
    const auto s2 = make_setup(5, 31);
    for (unsigned long n = 1; n < s2.q; ++n) {
        unsigned long acc = 1;
        for (int32_t i = 0; i < s2.dlog[n]; ++i) acc = acc * s2.gen % s2.q;
        CHECK(acc == n);
    }
}

TEST_CASE("character values: multiplicativity, period, conductor kill") {
    const auto setup = make_setup(3, 7);
    const auto chars = all_characters(setup);
    REQUIRE(chars.size() == 3);
    CHECK(chars[0].is_trivial());

    for (const auto& psi : chars) {
        for (long m = -10; m <= 10; ++m) {
            CHECK(psi.value_exact(m + 7 * 3) == psi.value_exact(m));
            for (long n = 1; n <= 10; ++n)
                CHECK(psi.value_exact(m * n) == psi.value_exact(m) * psi.value_exact(n));
        }
        CHECK(psi.value_exact(14).is_zero());
        CHECK_FALSE(psi.exponent(7).has_value());
        CHECK(psi.parity() == 1);
        // psi(n)^p = 1 for any n coprime to q.
        auto pw = CyclotomicElement(3, Rational(1));
        for (int i = 0; i < 3; ++i) pw = pw * psi.value_exact(5);
        CHECK(pw.to_rational() == Rational(1));
    }

    // psi_j(gen) = zeta_p^j pins the indexing to the generator.
    CHECK(chars[1].exponent(3).value() == 1);
    CHECK(chars[2].exponent(3).value() == 2);
    CHECK(chars[1].value_exact(3) == CyclotomicElement(3, Rational(1), 1));

    // The trivial character is 1 away from q.
    for (long n = 1; n <= 20; ++n) {
        if (n % 7 == 0) continue;
        CHECK(chars[0].value_exact(n).to_rational() == Rational(1));
    }
}

TEST_CASE("conjugate character and value_on_group") {
    const auto setup = make_setup(5, 11);
    const auto chars = all_characters(setup);
    for (unsigned j = 0; j < 5; ++j) {
        CHECK(chars[j].conjugate().index() == (5 - j) % 5);
        for (long n = 1; n <= 10; ++n)
            CHECK(chars[j].conjugate().value_exact(n) == chars[j].value_exact(n).conjugate());
        // value_on_group(a) = zeta^{ja} matches value_exact at gen^a.
        long ga = 1;
        for (long a = 0; a < 5; ++a) {
            CHECK(chars[j].value_on_group(a) ==
                  CyclotomicElement(5, Rational(1), static_cast<long>(j) * a));
            CHECK(chars[j].value_exact(ga) == chars[j].value_on_group(a));
            ga = ga * static_cast<long>(setup.gen) % 11;
        }
    }
}

TEST_CASE("numerical value agrees with the exact embedding") {
    const auto setup = make_setup(3, 7);
    const DirichletCharacter psi(setup, 1);
    const mpfr_prec_t prec = 192;
    for (long n = 1; n <= 12; ++n) {
        const Complex a = psi.value(n, prec);
        const Complex b = psi.value_exact(n).embed(1, prec);
        CHECK(abs(a - b).to_double() < 1e-40);
    }
}

TEST_CASE("gauss sums") {
    const mpfr_prec_t prec = 256;

    // Modified convention at the trivial character: exactly -1.
    const auto setup = make_setup(3, 7);
    const auto chars = all_characters(setup);
    const Complex t0 = gauss_sum(chars[0], prec);
    CHECK(t0.re.to_double() == doctest::Approx(-1.0).epsilon(1e-30));
    CHECK(t0.im.to_double() == doctest::Approx(0.0).epsilon(1e-30));

    // |tau(psi)|^2 = q for nontrivial psi, across several setups.
    for (auto [p, q] : std::vector<std::pair<unsigned, unsigned>>{
             {3, 7}, {3, 13}, {5, 11}, {7, 29}}) {
        const auto s = make_setup(p, q);
        for (unsigned j = 1; j < p; ++j) {
            const Complex t = gauss_sum(DirichletCharacter(s, j), prec);
            CHECK(abs2(t).to_double() == doctest::Approx(static_cast<double>(q)).epsilon(1e-30));
        }
    }

    // Frozen reference value: p=3, q=7, generator 3, j=1, zeta_3 = e^{2 pi i/3}.
    const Complex t1 = gauss_sum(chars[1], prec);
    CHECK(t1.re.to_double() == doctest::Approx(2.37046940557620059157501465201272).epsilon(1e-15));
    CHECK(t1.im.to_double() == doctest::Approx(-1.17510629188478700261770568983433).epsilon(1e-15));
    // The conjugate character has the conjugate Gauss sum (psi is even).
    const Complex t2 = gauss_sum(chars[2], prec);
    CHECK(abs(t2 - conj(t1)).to_double() < 1e-40);
}
