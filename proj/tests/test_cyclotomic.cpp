#include <doctest.h>

#include <random>
#include <vector>

#include "thetalab/cyclotomic.hpp"

using namespace thetalab;

namespace {

CyclotomicElement random_element(unsigned p, std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<Rational> c;
    for (unsigned i = 0; i + 1 < p; ++i) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        c.push_back(std::move(r));
    }
    return CyclotomicElement(p, std::move(c));
}

}  // namespace

TEST_CASE("construction and basis reduction") {
    // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)) in the power basis.
    CyclotomicElement top(3, Rational(1), 2);
    std::vector<Rational> expect{Rational(-1), Rational(-1)};
    CHECK(top.coeffs() == expect);

    // Exponents reduce mod p, including negative ones.
    CHECK(CyclotomicElement(5, Rational(2), 7) == CyclotomicElement(5, Rational(2), 2));
    CHECK(CyclotomicElement(5, Rational(2), -1) == CyclotomicElement(5, Rational(2), 4));

    CHECK(CyclotomicElement(7).is_zero());
    CHECK(CyclotomicElement(7, Rational(0), 3).is_zero());
}

TEST_CASE("1 + zeta + ... + zeta^{p-1} = 0") {
    for (unsigned p : {3u, 5u, 7u, 13u}) {
        CyclotomicElement s(p);
        for (unsigned k = 0; k < p; ++k) s = s + CyclotomicElement(p, Rational(1), k);
        CHECK(s.is_zero());
    }
}

TEST_CASE("ring axioms hold on random elements") {
    std::mt19937 rng(7);
    for (unsigned p : {3u, 5u, 7u}) {
        for (int trial = 0; trial < 60; ++trial) {
            const auto a = random_element(p, rng);
            const auto b = random_element(p, rng);
            const auto c = random_element(p, rng);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a - b) + b == a);
            CHECK(a * CyclotomicElement(p, Rational(1)) == a);
        }
    }
}

TEST_CASE("rationality detection") {
    CyclotomicElement r(5, Rational(-3, 7));
    CHECK(r.is_rational());
    CHECK(r.to_rational() == Rational(-3, 7));
    CyclotomicElement z(5, Rational(1), 1);
    CHECK_FALSE(z.is_rational());
    CHECK_THROWS(z.to_rational());

    // zeta * zeta^{p-1} = 1 is rational even though the factors are not.
    const auto prod = CyclotomicElement(7, Rational(1), 1) * CyclotomicElement(7, Rational(1), 6);
    CHECK(prod.is_rational());
    CHECK(prod.to_rational() == Rational(1));
}

TEST_CASE("galois action is a ring homomorphism and has order p-1") {
    std::mt19937 rng(11);
    for (unsigned p : {5u, 7u}) {
        for (int trial = 0; trial < 30; ++trial) {
            const auto a = random_element(p, rng);
            const auto b = random_element(p, rng);
            for (long k = 1; k < static_cast<long>(p); ++k) {
                CHECK((a + b).galois_apply(k) == a.galois_apply(k) + b.galois_apply(k));
                CHECK((a * b).galois_apply(k) == a.galois_apply(k) * b.galois_apply(k));
            }
            // sigma_2 composed with sigma_{(p+1)/2} is sigma_{p+1} = identity.
            CHECK(a.galois_apply(2).galois_apply((p + 1) / 2) == a);
            CHECK(a.conjugate().conjugate() == a);
        }
    }
    CHECK_THROWS(CyclotomicElement(5, Rational(1), 1).galois_apply(5));
    CHECK_THROWS(CyclotomicElement(5, Rational(1), 1).galois_apply(0));
}

TEST_CASE("norm: known values and multiplicativity") {
    // Norm of a rational r is r^(p-1).
    CHECK(CyclotomicElement(5, Rational(2)).norm() == Rational(16));
    CHECK(CyclotomicElement(3, Rational(-3, 2)).norm() == Rational(9, 4));
    // Norm of zeta is Phi_p(0) = 1... up to the sign (-1)^(p-1) = +1 for odd p.
    CHECK(CyclotomicElement(7, Rational(1), 1).norm() == Rational(1));
    // Norm of 1 - zeta is Phi_p(1) = p.
    for (unsigned p : {3u, 5u, 7u, 13u}) {
        const auto one_minus_zeta =
            CyclotomicElement(p, Rational(1)) - CyclotomicElement(p, Rational(1), 1);
        CHECK(one_minus_zeta.norm() == Rational(static_cast<long>(p)));
    }
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_element(5, rng);
        const auto b = random_element(5, rng);
        CHECK((a * b).norm() == a.norm() * b.norm());
    }
}

TEST_CASE("ord_frakp: ramification bookkeeping") {
    for (unsigned p : {3u, 5u, 7u}) {
        const auto one_minus_zeta =
            CyclotomicElement(p, Rational(1)) - CyclotomicElement(p, Rational(1), 1);
        CHECK(one_minus_zeta.ord_frakp() == 1);
        CHECK(CyclotomicElement(p, Rational(static_cast<long>(p))).ord_frakp() == p - 1);
        CHECK(CyclotomicElement(p, Rational(1), 1).ord_frakp() == 0);
        CHECK(CyclotomicElement(p).ord_frakp() == kValInfinity);
        // Powers of (1 - zeta) pick up exactly one unit of valuation each.
        auto pw = one_minus_zeta;
        for (long e = 1; e <= 4; ++e) {
            CHECK(pw.ord_frakp() == e);
            pw = pw * one_minus_zeta;
        }
    }
    CHECK(ord_frakp_rational(Rational(6, 7), 3) == 2);
    CHECK(ord_frakp_rational(Rational(5, 3), 3) == -2);
    CHECK(ord_frakp_rational(Rational(7, 5), 7) == 6);
    CHECK(ord_frakp_rational(Rational(0), 5) == kValInfinity);
}

TEST_CASE("numerical embeddings agree with exact arithmetic") {
    const mpfr_prec_t prec = 192;
    std::mt19937 rng(17);
    const unsigned p = 7;
    const auto a = random_element(p, rng);
    const auto b = random_element(p, rng);
    const auto ab = a * b;
    for (long k = 1; k < static_cast<long>(p); ++k) {
        const Complex ea = a.embed(k, prec);
        const Complex eb = b.embed(k, prec);
        const Complex eab = ab.embed(k, prec);
        const Complex diff = eab - ea * eb;
        CHECK(abs(diff).to_double() < 1e-40);
    }
    // embed(k) of zeta is a primitive p-th root: its p-th power is 1.
    const auto zeta = CyclotomicElement(p, Rational(1), 1);
    Complex z = zeta.embed(2, prec);
    Complex acc(1L, prec);
    for (unsigned i = 0; i < p; ++i) acc = acc * z;
    CHECK(abs(acc - Complex(1L, prec)).to_double() < 1e-40);
    // Norm equals the product of all embeddings.
    Complex prod(1L, prec);
    for (long k = 1; k < static_cast<long>(p); ++k) prod = prod * a.embed(k, prec);
    const Real nrm = to_real(a.norm(), prec);
    CHECK(abs(prod - Complex(nrm)).to_double() < 1e-30);
}

TEST_CASE("str rendering") {
    CHECK(CyclotomicElement(5).str() == "0");
    CHECK(CyclotomicElement(5, Rational(3), 2).str() == "3*z^2");
    CHECK(CyclotomicElement(3, Rational(1, 3)) .str() == "(1/3)*1");
    const CyclotomicElement e(3, std::vector<Rational>{Rational(1, 3), Rational(2, 3)});
    CHECK(e.str() == "(1/3)*(1+2*z)");
}
