#pragma once

// Smoothing kernels for the approximate functional equation of L-functions
// attached to weight-2 motives of Gamma-factor (2*pi)^{-d*s} Gamma(s)^d
// (d = dim A = 1 for elliptic curves, 2 for abelian surfaces).
//
//   phi_d(x)   = inverse Mellin transform of (2*pi)^{-d*s} Gamma(s)^d:
//                  d=1:  exp(-2*pi*x)
//                  d=2:  2*K0(4*pi*sqrt(x))
//   Phi_j(y)   = int_y^infty phi_d(u) u^j du, the incomplete-Mellin tail
//                weights entering the two split sums at s = 1.  Closed
//                forms (derived from d/dv[v K1(cv)] = -c v K0(cv) and
//                d/dv[v^2 K0(cv)] = 2v K0 - c v^2 K1):
//                  d=1, j=0:  exp(-2*pi*y) / (2*pi)
//                  d=1, j=1:  (2*pi*y + 1) exp(-2*pi*y) / (2*pi)^2
//                  d=2, j=0:  (sqrt(y)/pi) K1(4*pi*sqrt(y))
//                  d=2, j=1:  (y^{3/2}/pi + sqrt(y)/(4*pi^3)) K1(4*pi*sqrt(y))
//                             + (y/(2*pi^2)) K0(4*pi*sqrt(y))
//
// Sanity anchors: Phi_0(0) = int_0^infty phi_d = (2*pi)^{-d} = Gamma-factor
// at s = 1.

#include "thetalab/mpreal.hpp"

namespace thetalab {

/// phi_d(x) for x > 0.
Real kernel_phi(const Real& x, int d, mpfr_prec_t prec);

/// Phi_j(y) = int_y^infty phi_d(u) u^j du for y >= 0, j in {0, 1}.
Real kernel_tail(const Real& y, int j, int d, mpfr_prec_t prec);

}  // namespace thetalab
