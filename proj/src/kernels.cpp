#include "thetalab/kernels.hpp"

#include <stdexcept>

#include "thetalab/bessel.hpp"

namespace thetalab {

Real kernel_phi(const Real& x, int d, mpfr_prec_t prec) {
    if (x.sign() <= 0) throw std::domain_error("kernel_phi: x must be positive");
    const Real pi = Real::pi(prec + 16);
    if (d == 1) {
        return exp(-(pi * 2L * x.with_prec(prec + 16))).with_prec(prec);
    }
    if (d == 2) {
        const Real z = pi * 4L * sqrt(x.with_prec(prec + 16));
        return (bessel_k0(z, prec + 8) * 2L).with_prec(prec);
    }
    throw std::invalid_argument("kernel_phi: d must be 1 or 2");
}

Real kernel_tail(const Real& y, int j, int d, mpfr_prec_t prec) {
    if (y.sign() < 0) throw std::domain_error("kernel_tail: y must be nonnegative");
    if (j != 0 && j != 1) throw std::invalid_argument("kernel_tail: j must be 0 or 1");
    const mpfr_prec_t W = prec + 16;
    const Real pi = Real::pi(W);

    if (d == 1) {
        const Real yw = y.with_prec(W);
        const Real two_pi = pi * 2L;
        const Real e = exp(-(two_pi * yw));
        if (j == 0) return (e / two_pi).with_prec(prec);
        return ((two_pi * yw + 1L) * e / (two_pi * two_pi)).with_prec(prec);
    }
    if (d == 2) {
        if (y.is_zero()) {
            // Phi_0(0) = (2*pi)^{-2}; Phi_1(0) = int_0^inf 2 K0(4 pi sqrt(u)) u du
            // = 2 * Gamma(2)^2 / (4 pi)^{2*2} * 2^2 ... evaluated directly:
            // Mellin of 2K0(2 sqrt(v)) at s is Gamma(s)^2, so at s = 2 with the
            // 4 pi^2 rescaling the integral is Gamma(2)^2/(2 pi)^4 = (2 pi)^{-4}.
            const Real tp = pi * 2L;
            Real v = (j == 0) ? 1L / (tp * tp) : 1L / (tp * tp * tp * tp);
            return v.with_prec(prec);
        }
        const Real yw = y.with_prec(W);
        const Real ry = sqrt(yw);            // sqrt(y)
        const Real z = pi * 4L * ry;         // Bessel argument
        const Real k1 = bessel_k1(z, W);
        if (j == 0) return (ry / pi * k1).with_prec(prec);
        const Real k0 = bessel_k0(z, W);
        const Real pi2 = pi * pi;
        const Real term_k1 = (yw * ry / pi + ry / (pi2 * pi * 4L)) * k1;
        const Real term_k0 = yw / (pi2 * 2L) * k0;
        return (term_k1 + term_k0).with_prec(prec);
    }
    throw std::invalid_argument("kernel_tail: d must be 1 or 2");
}

}  // namespace thetalab
