#include "thetalab/bessel.hpp"

#include <stdexcept>

namespace thetalab {

namespace {

// Bits of cancellation suffered by the ascending series: the partial sums
// grow like e^{z} while the result is ~e^{-z}, losing ~2z*log2(e) bits.
mpfr_prec_t series_guard_bits(double z) {
    return static_cast<mpfr_prec_t>(2.8854 * z) + 48;
}

// The asymptotic expansion bottoms out at a relative error ~e^{-2z}; it can
// serve a prec-bit request iff 2z*log2(e) comfortably exceeds prec.
bool asymptotic_reaches(double z, mpfr_prec_t prec) {
    return 2.8854 * z >= static_cast<double>(prec) + 24;
}

/// Ascending-series evaluation of K_nu (nu = 0 or 1) at working precision
/// large enough that the cancellation leaves prec good bits.
Real k_series(const Real& z, int nu, mpfr_prec_t prec) {
    const double zd = z.to_double();
    const mpfr_prec_t W = prec + series_guard_bits(zd);

    const Real zw = z.with_prec(W);
    const Real u = zw * zw / 4L;
    const Real log_half_z = log(zw / 2L);
    const Real gamma = Real::euler_gamma(W);
    const Real lg = log_half_z + gamma;  // log(z/2) + EulerGamma

    if (nu == 0) {
        // K0 = -(log(z/2)+gamma) I0(z) + sum_{k>=1} H_k u^k / (k!)^2
        Real term(1L, W);   // u^k/(k!)^2, starting at k = 0
        Real i0(1L, W);
        Real hsum(W);       // sum of H_k * term
        Real h(W);          // harmonic number H_k
        for (long k = 1;; ++k) {
            term *= u;
            term /= k;
            term /= k;
            h += Real(1L, W) / k;
            i0 += term;
            hsum += h * term;
            // Terms are positive and eventually decay superexponentially.
            if (term.exponent() < i0.exponent() - static_cast<long>(W) - 8) break;
            if (k > 10000) throw std::runtime_error("bessel_k0: series did not converge");
        }
        return (hsum - lg * i0).with_prec(prec);
    }

    // K1 = 1/z + (log(z/2)+gamma) I1(z) - (z/4) sum_k (H_k + H_{k+1}) t_k,
    // with t_k = u^k/(k!(k+1)!) and I1 = (z/2) sum_k t_k.
    Real t(1L, W);         // t_k, starting at k = 0
    Real s_plain(1L, W);   // sum t_k
    Real h(W);             // H_k
    Real hsum = Real(1L, W);  // sum (H_k + H_{k+1}) t_k; k=0 term: H_0+H_1 = 1
    for (long k = 1;; ++k) {
        t *= u;
        t /= k;
        t /= (k + 1);
        h += Real(1L, W) / k;
        const Real h_next = h + Real(1L, W) / (k + 1);
        s_plain += t;
        hsum += (h + h_next) * t;
        if (t.exponent() < s_plain.exponent() - static_cast<long>(W) - 8) break;
        if (k > 10000) throw std::runtime_error("bessel_k1: series did not converge");
    }
    const Real i1 = (zw / 2L) * s_plain;
    return (1L / zw + lg * i1 - (zw / 4L) * hsum).with_prec(prec);
}

/// Asymptotic evaluation sqrt(pi/2z) e^{-z} (1 + sum_k a_k(nu)/z^k) where
/// a_k = prod_{j<=k} (4 nu^2 - (2j-1)^2) / (8 j).  Only called when the
/// expansion reaches the requested precision before its smallest term.
Real k_asymptotic(const Real& z, int nu, mpfr_prec_t prec) {
    const mpfr_prec_t W = prec + 32;
    const Real zw = z.with_prec(W);
    const long mu = 4 * nu * nu;

    Real sum(1L, W);
    Real term(1L, W);
    for (long k = 1;; ++k) {
        const long odd = 2 * k - 1;
        term *= Real(mu - odd * odd, W) / (8 * k);
        term /= zw;
        sum += term;
        if (abs(term).exponent() < -static_cast<long>(prec) - 16) break;
        if (k > 100000) throw std::runtime_error("bessel: asymptotic series stalled");
    }
    const Real pref = sqrt(Real::pi(W) / (zw * 2L)) * exp(-zw);
    return (pref * sum).with_prec(prec);
}

Real k_eval(const Real& z, int nu, mpfr_prec_t prec) {
    if (z.sign() <= 0) throw std::domain_error("bessel: argument must be positive");
    const double zd = z.to_double();
    if (asymptotic_reaches(zd, prec)) return k_asymptotic(z, nu, prec);
    return k_series(z, nu, prec);
}

}  // namespace

Real bessel_k0(const Real& z, mpfr_prec_t prec) { return k_eval(z, 0, prec); }
Real bessel_k1(const Real& z, mpfr_prec_t prec) { return k_eval(z, 1, prec); }

}  // namespace thetalab
