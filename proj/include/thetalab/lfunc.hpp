#pragma once

// Numerical evaluation of L(A, psi, 1) for the degree-2d L-function of a
// Jacobian twisted by a Dirichlet character, via a smoothed approximate
// functional equation whose root number is solved numerically instead of
// assumed.
//
// Design: with T(u) = sum_n a_n psi(n) phi_d(u n / sqrt(N)) the completed
// value Lambda(1) = integral of T(u) du splits, for any t > 0, as
//
//   Lambda(1) = S(t) + w * conj(S(1/t)),
//   S(c)      = sum_n a_n psi(n) (sqrt(N)/n) Phi_0(c n / sqrt(N)),
//
// where Phi_0(y) = int_y^infty phi_d(v) dv and w is the root number of the
// functional equation.  Evaluating S at the three scales c in {5/6, 1, 6/5}
// gives (i) a 2x2 solve for w from the splits t = 1 and t = 6/5, (ii) the
// value Lambda(1) = S(1) + w conj(S(1)), and (iii) an independent residual
// from the third split t = 5/6 that serves as the reported error estimate.
// Finally L(1) = Lambda(1) * (2 pi)^d / sqrt(N).

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "thetalab/characters.hpp"
#include "thetalab/curves.hpp"
#include "thetalab/mpreal.hpp"
#include "thetalab/rational.hpp"

namespace thetalab {

struct TwistedLSpec {
    int d = 1;                                       ///< dimension of the Jacobian
    mpz_class N;                                     ///< functional-equation conductor
    const std::vector<long long>* coeffs = nullptr;  ///< 1-based a_n, defined up to the cutoff
    const DirichletCharacter* psi = nullptr;         ///< nullptr = untwisted series
    mpfr_prec_t precision_bits = kDefaultPrec;
    int target_digits = 12;
    size_t cutoff_override = 0;                      ///< 0 = use afe_cutoff policy
};

struct LValueResult {
    Complex value;        ///< L(A, psi, 1)
    Complex root_number;  ///< solved w; ||w| - 1| is a health check
    Real err_estimate;    ///< third-split residual, an upper proxy for the error in Lambda(1)
    size_t terms_used = 0;
};

/// Series cutoff policy: M = 2 * ceil(sqrt(N) * ((D ln 10)/(2 pi d))^d) with
/// D = target_digits + 2, chosen so the kernel tail past M is below
/// 10^{-target_digits - 2} before the safety doubling.
size_t afe_cutoff(const mpz_class& N, int d, int target_digits);

/// Kernel weights (sqrt(N)/n) Phi_0(c n / sqrt(N)) for the three scales,
/// shared by every character evaluated against the same (N, d).  Entries
/// stop at `effective` once the slowest-decaying scale underflows the
/// working precision.
struct AfeKernelTable {
    int d = 1;
    mpz_class N;
    mpfr_prec_t prec = kDefaultPrec;
    size_t M = 0;          ///< requested cutoff
    size_t effective = 0;  ///< entries actually materialized (<= M)
    std::vector<Real> w_lo, w_mid, w_hi;  ///< 1-based; scales 5/6, 1, 6/5
    Real sqrt_n;
};

AfeKernelTable afe_kernel_table(const mpz_class& N, int d, mpfr_prec_t prec, size_t M);

/// Evaluate one character against a prebuilt kernel table.  psi == nullptr
/// evaluates the untwisted series; a trivial psi is rejected (the truncated
/// value L_{{q}} is the untwisted value times the exact factor P_q(1/q),
/// never an imprimitive series evaluation).
LValueResult lvalue_s1_with(const AfeKernelTable& table, const std::vector<long long>& coeffs,
                            const DirichletCharacter* psi);

/// One-shot evaluation.
LValueResult lvalue_s1(const TwistedLSpec& spec);

/// Functional-equation conductor of the twist by a character of conductor q:
/// the curve's per-q override when stored, else (prime-to-q part of N_A) * q^{2d}.
mpz_class twisted_conductor(const CurveData& curve, unsigned long q);

/// Exact Euler factor value P_q(1/q) used to pass from L(A,1) to the
/// q-truncated L_{{q}}(A,1).  At bad q the stored factor is used and
/// *used_bad is set when the pointer is non-null.
Rational truncation_factor(const CurveData& curve, unsigned long q, bool* used_bad = nullptr);

}  // namespace thetalab
