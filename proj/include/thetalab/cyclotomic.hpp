#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_p) for a prime p, in the
// power basis 1, zeta, ..., zeta^{p-2} with the relation
//     Phi_p(zeta) = 1 + zeta + ... + zeta^{p-1} = 0.
//
// The field carries a unique prime above p, namely frak_p = (1 - zeta),
// which is totally ramified with residue degree 1.  Consequently
//     ord_frakp(alpha) = v_p(Norm(alpha))        for alpha != 0,
// and for a rational r, ord_frakp(r) = (p-1) * v_p(r).  These exact
// valuations drive every integrality and congruence verdict downstream.

#include <vector>

#include "thetalab/mpreal.hpp"
#include "thetalab/rational.hpp"

namespace thetalab {

class CyclotomicElement {
public:
    /// The zero element of Q(zeta_p).
    explicit CyclotomicElement(unsigned p);
    /// The element c * zeta^k (k may be any integer; it is reduced mod p).
    CyclotomicElement(unsigned p, const Rational& c, long k = 0);
    /// Element with the given coefficients on 1, zeta, ..., zeta^{p-2}.
    CyclotomicElement(unsigned p, std::vector<Rational> coeffs);

    unsigned order() const { return p_; }
    /// Coefficients on the power basis; size p-1.
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// The value as a rational; throws unless is_rational().
    Rational to_rational() const;

    CyclotomicElement operator-() const;
    friend CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b);
    friend CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b);
    friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
    friend CyclotomicElement operator*(const CyclotomicElement& a, const Rational& s);
    friend CyclotomicElement operator*(const Rational& s, const CyclotomicElement& a) { return a * s; }
    friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);

    /// Galois action zeta -> zeta^k for k not divisible by p.
    CyclotomicElement galois_apply(long k) const;
    /// Complex conjugation (zeta -> zeta^{-1}).
    CyclotomicElement conjugate() const { return galois_apply(static_cast<long>(p_) - 1); }

    /// Field norm to Q: the product of all p-1 conjugates, computed exactly
    /// as the determinant of the multiplication-by-alpha matrix (equal to
    /// Res(Phi_p, A) for the coefficient polynomial A).
    Rational norm() const;

    /// Valuation at the unique prime (1 - zeta) above p; kValInfinity for 0.
    long ord_frakp() const;

    /// Numerical embedding sending zeta to exp(2*pi*i*k/p).
    Complex embed(long k, mpfr_prec_t prec) const;

    /// Human-readable rendering with z for zeta, common content factored
    /// out, e.g. "-2*(1+z+z^3)", "(1/3)*(1+2*z)", "3*z^2", "0".
    std::string str() const;

private:
    void reduce_exponent_inplace(std::vector<Rational>& raw) const;  // raw has size p
    unsigned p_;
    std::vector<Rational> c_;  // size p-1
};

/// ord_frakp of a rational viewed inside Q(zeta_p): (p-1) * v_p(r).
long ord_frakp_rational(const Rational& r, unsigned p);

}  // namespace thetalab
