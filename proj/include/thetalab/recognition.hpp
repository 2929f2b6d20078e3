#pragma once

// Exact recognition of numerically computed values: continued-fraction
// rationalization of reals, recovery of a cyclotomic integer from the tuple
// of its complex embeddings, and assembly of the equivariant element from
// recognized L-values.

#include <optional>
#include <string>
#include <vector>

#include "thetalab/cyclotomic.hpp"
#include "thetalab/group_algebra.hpp"
#include "thetalab/mpreal.hpp"
#include "thetalab/rational.hpp"

namespace thetalab {

/// Best rational approximation a/b to x with |b| <= denominator_bound and
/// |x - a/b| < eps, by the continued-fraction convergents of x.  Returns
/// nullopt when no convergent within the bound is close enough.  When
/// eps < 1/(2*bound^2) the result, if it exists, is the unique such
/// rational, so recognition cannot silently pick a wrong candidate.
std::optional<Rational> rationalize(const Real& x, const mpz_class& denominator_bound, const Real& eps);

struct TupleRecognition {
    bool ok = false;
    /// On failure, one of: "imaginary part exceeds tolerance",
    /// "rationalization failed", "embedding residual exceeds tolerance",
    /// each with detail appended.
    std::string failure;
    /// Recognized element alpha with embeddings sigma_k(alpha) matching the
    /// input tuple: alpha = sum c_m zeta_p^m, x_k = sum c_m zeta_p^{km}.
    CyclotomicElement element{3};
    Real residual{0L, 64};
};

/// Recover alpha in Q(zeta_p) from the full tuple (x_1, ..., x_{p-1}) of
/// its embeddings zeta_p -> zeta_p^k.  The linear system is solved at the
/// inputs' precision, imaginary parts of the solution must vanish within
/// tol * scale, the real parts are rationalized with the given bound, and
/// the exact candidate is re-embedded to check the residual against
/// tol * scale, with scale = 1 + max_k |x_k|.
TupleRecognition conjugate_tuple_solve(const std::vector<Complex>& embeddings, unsigned p,
                                       const mpz_class& denominator_bound, const Real& tol);

/// Numeric S_g = x_triv + sum_{k=1}^{p-1} zeta_p^{k g_exp} x_k, the
/// character-sum coefficient attached to the group element s^{g_exp}.
Complex sg_sum(const Complex& x_triv, const std::vector<Complex>& twisted, unsigned p, long g_exp);

/// Assemble Theta = sum_g (S_g / p) g^{-1} from numeric values: each S_g / p
/// is rationalized (it must be real within tolerance).  On failure returns
/// nullopt and stores a message in *failure when provided.
std::optional<GroupAlgebraElement> theta_assemble(const Complex& x_triv, const std::vector<Complex>& twisted,
                                                  unsigned p, const mpz_class& denominator_bound,
                                                  const Real& tol, std::string* failure = nullptr);

}  // namespace thetalab
