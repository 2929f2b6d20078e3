#pragma once

// Hyperelliptic curve models y^2 + h(x) y = f(x) over Q (genus 1 or 2),
// reduction mod good primes, naive point counting over F_l and F_{l^2},
// Euler factors, Dirichlet-series coefficients, and the elliptic real
// period via the arithmetic-geometric mean.
//
// External arithmetic data that cannot be derived from the model at this
// scale (conductor, real period for genus 2, bad-prime Euler factors,
// torsion, analytic Sha orders) ride along as input fields.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "thetalab/mpreal.hpp"
#include "thetalab/rational.hpp"

namespace thetalab {

struct CurveData {
    std::string label;
    int genus = 0;                 ///< 1 or 2 (= dim of the Jacobian)
    std::vector<long> h;           ///< ascending coefficients, deg <= genus+1
    std::vector<long> f;           ///< ascending coefficients, deg <= 2*genus+2
    mpz_class conductor;
    std::string real_period;       ///< decimal string, >= 15 significant digits
    unsigned long torsion_q = 1;   ///< |A(Q)_tors|
    std::optional<unsigned long> torsion_f;  ///< |A(F)_tors| when known
    /// Bad-prime Euler factors: l -> coefficient list (1, c1, ...) of P_l.
    std::map<unsigned long, std::vector<long>> bad_euler;
    std::optional<mpz_class> sha_analytic;
    /// Per-q override of the twisted functional-equation conductor, for the
    /// cases where the generic N_A * q^{2d} rule does not apply.
    std::map<unsigned long, mpz_class> twist_conductor;

    bool is_good(unsigned long ell) const { return mpz_divisible_ui_p(conductor.get_mpz_t(), ell) == 0; }
    /// Stored real period Omega^+ parsed at the given precision.
    Real period(mpfr_prec_t prec) const;
    /// Hash of (genus, h, f, conductor) used to key the coefficient cache.
    std::string model_hash() const;
    /// Display form "y^2 + (x^3+1)y = x^5 - x^4 - ..." of the model.
    std::string equation_str() const;
};

struct EulerFactor {
    unsigned long ell = 0;
    std::vector<long long> coeffs;  ///< (1, c1, ..., c_deg)

    /// P(1) as an exact integer (for good l this is #A(F_l) > 0).
    long long at_one() const;
    /// P(1/ell) as an exact rational.
    Rational at_inverse_ell() const;
    /// Display form "1 - T + 2T^2 - 11T^3 + 121T^4".
    std::string str() const;
};

struct DirichletSeries {
    std::vector<long long> a;  ///< 1-based: a[n] for 1 <= n <= M (a[0] unused)
    size_t M = 0;
};

/// Exact discriminant of the model: for genus 1 the standard Weierstrass
/// discriminant from the b-invariants; for genus 2 the normalized binary-
/// sextic discriminant 2^{-12} disc_6(4f + h^2).  Primes dividing it are
/// exactly the primes of bad reduction for the minimal models this lab
/// consumes (validated at ingestion).
mpz_class model_discriminant(const CurveData& curve);

/// #C(F_{l^k}) of the smooth projective model, k in {1, 2}, l a good prime
/// (l = 2 included).  Throws on singular reduction, which signals an
/// l | N_A mismatch in the input data.
long long count_points(const CurveData& curve, unsigned long ell, int k);

/// Euler factor at any prime: computed from point counts at good l
/// (a1 = l+1-N1; genus 2 also a2 = (a1^2 - l^2 - 1 + N2)/2), served from
/// bad_euler at bad l (error when absent).
EulerFactor euler_factor(const CurveData& curve, unsigned long ell);

/// Dirichlet coefficients a_1..a_M of L(A,s) = prod_l P_l(l^{-s})^{-1}
/// via prime-power recursion and multiplicativity.
DirichletSeries dirichlet_coeffs(const CurveData& curve, size_t M);

/// gcd over the given good primes of P_l(1) = #A(F_l); a multiple of
/// |A(Q)_tors| by injectivity of torsion reduction at good odd primes.
mpz_class torsion_gcd_bound(const CurveData& curve, const std::vector<unsigned long>& good_primes);

/// Real period Omega^+ of a genus-1 model by AGM on the root data of
/// 4x^3 + b2 x^2 + 2 b4 x + b6: both-component doubling applied when the
/// discriminant is positive.
Real elliptic_real_period_agm(const CurveData& curve, mpfr_prec_t prec);

}  // namespace thetalab
