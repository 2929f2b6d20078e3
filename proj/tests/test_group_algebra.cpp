#include <doctest.h>

#include <random>
#include <vector>

#include "thetalab/group_algebra.hpp"

using namespace thetalab;

namespace {

GroupAlgebraElement random_element(unsigned p, std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 9);
    std::vector<Rational> c;
    for (unsigned i = 0; i < p; ++i) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        c.push_back(std::move(r));
    }
    return GroupAlgebraElement(p, std::move(c));
}

}  // namespace

TEST_CASE("coefficient access wraps mod p") {
    GroupAlgebraElement x(5);
    x.set_coeff(2, Rational(3, 4));
    CHECK(x.coeff(2) == Rational(3, 4));
    CHECK(x.coeff(7) == Rational(3, 4));
    CHECK(x.coeff(-3) == Rational(3, 4));
    x.set_coeff(-1, Rational(1));
    CHECK(x.coeff(4) == Rational(1));
    CHECK(x.coeffs().size() == 5);
    CHECK_THROWS(GroupAlgebraElement(5, std::vector<Rational>(4, Rational(1))));
}

TEST_CASE("convolution: s^i * s^j = s^{i+j mod p}") {
    const unsigned p = 5;
    for (unsigned i = 0; i < p; ++i) {
        for (unsigned j = 0; j < p; ++j) {
            GroupAlgebraElement a(p), b(p);
            a.set_coeff(i, Rational(1));
            b.set_coeff(j, Rational(1));
            GroupAlgebraElement expect(p);
            expect.set_coeff((i + j) % p, Rational(1));
            CHECK(a * b == expect);
        }
    }
}

TEST_CASE("ring axioms and commutativity on random elements") {
    std::mt19937 rng(23);
    for (unsigned p : {3u, 5u, 7u}) {
        GroupAlgebraElement one(p);
        one.set_coeff(0, Rational(1));
        for (int trial = 0; trial < 60; ++trial) {
            const auto a = random_element(p, rng);
            const auto b = random_element(p, rng);
            const auto c = random_element(p, rng);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * one == a);
            CHECK((a - b) + b == a);
            CHECK(a * Rational(2) == a + a);
        }
    }
}

TEST_CASE("norm element: x * (sum of all s^j) = (sum of coefficients) * that sum") {
    std::mt19937 rng(29);
    const unsigned p = 7;
    GroupAlgebraElement all(p, std::vector<Rational>(p, Rational(1)));
    for (int trial = 0; trial < 20; ++trial) {
        const auto x = random_element(p, rng);
        Rational total(0);
        for (const auto& ci : x.coeffs()) total += ci;
        CHECK(x * all == total * all);
    }
}

TEST_CASE("p-integrality verdicts") {
    GroupAlgebraElement x(3, {Rational(13, 21), Rational(-8, 21), Rational(-8, 21)});
    CHECK_FALSE(x.is_p_integral());
    CHECK(x.min_vp() == -1);

    GroupAlgebraElement y(3, {Rational(6, 7), Rational(9, 14), Rational(-2)});
    CHECK(y.is_p_integral());
    CHECK(y.min_vp() == 0);

    GroupAlgebraElement z(3, {Rational(9, 7), Rational(18), Rational(-27, 2)});
    CHECK(z.is_p_integral());
    CHECK(z.min_vp() == 2);

    CHECK(GroupAlgebraElement(5).is_p_integral());
    CHECK(GroupAlgebraElement(5).min_vp() == kValInfinity);

    // Scaling by p shifts min_vp by exactly one.
    CHECK((x * Rational(3)).is_p_integral());
    CHECK((x * Rational(3)).min_vp() == 0);
}

TEST_CASE("str rendering") {
    CHECK(GroupAlgebraElement(3).str() == "0");
    GroupAlgebraElement theta(3, {Rational(1, 147), Rational(-146, 147), Rational(148, 147)});
    CHECK(theta.str() == "(1/147)*(1-146*s+148*s^2)");
    GroupAlgebraElement unit(3, {Rational(1), Rational(0), Rational(0)});
    CHECK(unit.str() == "1");
    GroupAlgebraElement m(3, {Rational(0), Rational(-2), Rational(4)});
    CHECK(m.str() == "-2*(s-2*s^2)");
}
