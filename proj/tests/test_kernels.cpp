#include <doctest.h>

#include <string>

#include "thetalab/kernels.hpp"

using namespace thetalab;

namespace {

double rel_err(const Real& got, const std::string& ref36) {
    const Real ref(ref36, 256);
    return (abs(got.with_prec(256) - ref) / abs(ref)).to_double();
}

}  // namespace

TEST_CASE("kernel_phi against frozen references") {
    const mpfr_prec_t prec = 192;
    struct Row {
        const char* x;
        const char* phi1;
        const char* phi2;
    };
    const Row rows[] = {
        {"0.01", "0.939101367424292647547056877106362592",
         "0.589895502242769634744843437050669318"},
        {"0.3", "0.151835801980648886882511409515636402",
         "9.62986490262925865534670410324294887e-4"},
        {"1.5", "8.0699517570304599239205033924346624e-5",
         "1.31217173844536513200995953302381813e-7"},
    };
    for (const auto& r : rows) {
        const Real x(r.x, prec);
        CHECK(rel_err(kernel_phi(x, 1, prec), r.phi1) < 1e-33);
        CHECK(rel_err(kernel_phi(x, 2, prec), r.phi2) < 1e-33);
    }
    CHECK_THROWS(kernel_phi(Real(prec), 1, prec));       // x = 0
    CHECK_THROWS(kernel_phi(Real(1L, prec), 3, prec));   // unsupported d
}

TEST_CASE("kernel_tail against frozen references") {
    const mpfr_prec_t prec = 192;
    struct Row {
        const char* y;
        int d;
        int j;
        const char* val;
    };
    // Closed forms were cross-checked against direct numerical quadrature of
    // int_y^inf phi_d(u) u^j du before freezing.
    const Row rows[] = {
        {"0.05", 1, 0, "0.116247198728014402966039642235519325"},
        {"0.05", 1, 1, "0.0243136762345501003148440933924079223"},
        {"0.05", 2, 0, "0.00359443314418865700686832531920550399"},
        {"0.05", 2, 1, "3.80489631563028672456945407634355168e-4"},
        {"0.5", 1, 0, "0.00687770870204848890656766717920058441"},
        {"0.5", 1, 1, "0.0045334756881014050389400626096726847"},
        {"0.5", 2, 0, "1.36268243508472904166687209155402099e-5"},
        {"0.5", 2, 1, "8.61241335078983249204581583793553922e-6"},
        {"2", 1, 0, "5.55027774244398870345625356989544281e-7"},
        {"2", 1, 1, "1.19839096231308637464561835787145064e-6"},
        {"2", 2, 0, "2.61458401743039767428669435737294068e-9"},
        {"2", 2, 1, "5.86798941917956218163948451045609576e-9"},
    };
    for (const auto& r : rows) {
        CHECK(rel_err(kernel_tail(Real(r.y, prec), r.j, r.d, prec), r.val) < 1e-33);
    }
}

TEST_CASE("tail anchors at y = 0: full Mellin masses") {
    // Phi_0(0) = (2*pi)^{-d} and, for d = 2, Phi_1(0) = (2*pi)^{-4}.
    const mpfr_prec_t prec = 192;
    const Real two_pi = Real::pi(prec) * 2L;
    const Real zero(prec);
    CHECK((abs(kernel_tail(zero, 0, 1, prec) * two_pi - Real(1L, prec))).to_double() < 1e-50);
    CHECK((abs(kernel_tail(zero, 0, 2, prec) * two_pi * two_pi - Real(1L, prec))).to_double() <
          1e-50);
    CHECK((abs(kernel_tail(zero, 1, 2, prec) * pow_si(two_pi, 4) - Real(1L, prec))).to_double() <
          1e-50);
    // d = 1, j = 1: (2*pi*0 + 1)/(2*pi)^2.
    CHECK((abs(kernel_tail(zero, 1, 1, prec) * two_pi * two_pi - Real(1L, prec))).to_double() <
          1e-50);
}

TEST_CASE("tail is the antiderivative of the kernel: finite differences") {
    // Phi_j'(y) = -phi_d(y) y^j.  Check with a central difference at modest
    // precision; h = 2^-30 keeps the O(h^2) error near 1e-18.
    const mpfr_prec_t prec = 256;
    const Real h = pow_si(Real(2L, prec), -30);
    for (int d : {1, 2}) {
        for (int j : {0, 1}) {
            const Real y(0.4, prec);
            const Real deriv =
                (kernel_tail(y + h, j, d, prec) - kernel_tail(y - h, j, d, prec)) / (h * 2L);
            const Real expect = -(kernel_phi(y, d, prec) * pow_si(y, j));
            CHECK((abs(deriv - expect) / abs(expect)).to_double() < 1e-15);
        }
    }
}

TEST_CASE("tails are positive and decreasing") {
    const mpfr_prec_t prec = 128;
    for (int d : {1, 2}) {
        for (int j : {0, 1}) {
            Real prev = kernel_tail(Real(prec), j, d, prec);
            for (double yd = 0.1; yd <= 3.0; yd += 0.3) {
                const Real cur = kernel_tail(Real(yd, prec), j, d, prec);
                CHECK(cur.sign() == 1);
                CHECK(cur < prev);
                prev = cur;
            }
        }
    }
    CHECK_THROWS(kernel_tail(Real(-0.1, prec), 0, 1, prec));
    CHECK_THROWS(kernel_tail(Real(1L, prec), 2, 1, prec));  // j out of range
    CHECK_THROWS(kernel_tail(Real(1L, prec), 0, 5, prec));  // d out of range
}
