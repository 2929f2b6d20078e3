#pragma once

// Modified Bessel functions K0 and K1 at arbitrary precision.
//
// MPFR ships no modified Bessel functions, so these are computed from
// scratch with a precision-aware method split:
//   - small/medium arguments: the ascending power series around 0, run at
//     an enlarged working precision to absorb the e^{2z} cancellation
//     between the I_nu-type and harmonic-sum parts;
//   - large arguments: the divergent asymptotic expansion
//     K_nu(z) ~ sqrt(pi/2z) e^{-z} (1 + sum a_k(nu) z^{-k}),
//     used exactly when its smallest term e^{-2z} undershoots the target,
//     so the truncation never dominates the requested accuracy.
//
// Both functions return a value whose relative error is ~2^{-prec} with a
// small constant; `prec` is the caller's target precision, independent of
// the (larger) internal working precision.

#include "thetalab/mpreal.hpp"

namespace thetalab {

/// K0(z) for z > 0 with ~prec-bit relative accuracy.
Real bessel_k0(const Real& z, mpfr_prec_t prec);

/// K1(z) for z > 0 with ~prec-bit relative accuracy.
Real bessel_k1(const Real& z, mpfr_prec_t prec);

}  // namespace thetalab
