#include <doctest.h>

#include <string>
#include <vector>

#include "thetalab/bessel.hpp"

using namespace thetalab;

namespace {

// Relative deviation of `got` from a 36-significant-digit reference string;
// the string's own truncation (~1e-36) dominates any prec >= 128 evaluation.
double rel_err(const Real& got, const std::string& ref36) {
    const Real ref(ref36, 256);
    return (abs(got.with_prec(256) - ref) / abs(ref)).to_double();
}

struct KRef {
    const char* z;
    const char* k0;
    const char* k1;
};

// Independently computed references spanning the small-argument series
// regime, the method crossover, and the deep asymptotic regime.
const std::vector<KRef> kRefs = {
    {"0.125", "2.20786908674497006000761214484982059", "7.83111829911575116346433815699798008"},
    {"1", "0.421024438240708333335627379212609036", "0.601907230197234574737540001535617339"},
    {"3.7", "0.0156306599216266616121948374183580164", "0.0176280351022232666879950105972154656"},
    {"10", "1.77800623161676518113011927994927923e-5", "1.86487734538255845968168581223716747e-5"},
    {"40", "8.39286110009956703372830790498945302e-19", "8.49713195486103865077682324316696365e-19"},
    {"74", "1.05906764590362473841180627943919138e-33", "1.06619965314627523152490444992548574e-33"},
    {"76", "1.41436940664385401554326876730819326e-34", "1.42364425445932241170516146561355265e-34"},
    {"120", "8.76356809982557772213838907237329396e-54", "8.8000075200927613540832678106474578e-54"},
};

}  // namespace

TEST_CASE("K0/K1 against frozen references across both method regimes") {
    // The evaluator switches from the ascending series to the asymptotic
    // expansion where the latter reaches the requested precision; sweeping
    // precisions moves that boundary across the z grid (e.g. z = 74 is
    // asymptotic at 128 bits but series at 192), so every reference value
    // gets computed by both methods somewhere in this sweep.
    for (mpfr_prec_t prec : {mpfr_prec_t(128), mpfr_prec_t(192), mpfr_prec_t(320)}) {
        for (const auto& r : kRefs) {
            const Real z(r.z, prec);
            CHECK(rel_err(bessel_k0(z, prec), r.k0) < 1e-33);
            CHECK(rel_err(bessel_k1(z, prec), r.k1) < 1e-33);
        }
    }
}

TEST_CASE("precision of the result tracks the request") {
    const Real z("2.5", 320);
    CHECK(bessel_k0(z, 192).prec() == 192);
    CHECK(bessel_k1(z, 128).prec() == 128);
}

TEST_CASE("requesting more bits refines the value consistently") {
    // The 192-bit value agrees with the 384-bit value to ~192 bits: the two
    // evaluations must describe one function, not two method-dependent ones.
    for (const char* zs : {"0.5", "8", "70", "90"}) {
        const Real lo = bessel_k0(Real(zs, 192), 192);
        const Real hi = bessel_k0(Real(zs, 384), 384);
        const double rel = (abs(lo.with_prec(384) - hi) / abs(hi)).to_double();
        CHECK(rel < 1e-55);
    }
}

TEST_CASE("monotonicity and positivity on a coarse grid") {
    const mpfr_prec_t prec = 128;
    Real prev0(prec), prev1(prec);
    bool first = true;
    for (double zd = 0.25; zd <= 24.0; zd += 0.75) {
        const Real z(zd, prec);
        const Real k0 = bessel_k0(z, prec);
        const Real k1 = bessel_k1(z, prec);
        CHECK(k0.sign() == 1);
        CHECK(k1 > k0);  // K1 > K0 for all z > 0
        if (!first) {
            CHECK(k0 < prev0);  // strictly decreasing
            CHECK(k1 < prev1);
        }
        prev0 = k0;
        prev1 = k1;
        first = false;
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS(bessel_k0(Real(128), 128));          // zero
    CHECK_THROWS(bessel_k0(Real(-1L, 128), 128));     // negative
    CHECK_THROWS(bessel_k1(Real(-0.5, 128), 128));
}
