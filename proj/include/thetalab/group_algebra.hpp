#pragma once

// The rational group algebra Q[G] of a cyclic group G = <s> of prime order
// p, with exact rational coefficients.  Elements are written
//     a_0 + a_1 s + ... + a_{p-1} s^{p-1}.
//
// The lab's central object, the equivariant leading-term element Theta,
// lives here; the two questions asked of it are whether all coefficients
// lie in Z_(p) and what happens after scaling by p^d.

#include <vector>

#include "thetalab/rational.hpp"

namespace thetalab {

class GroupAlgebraElement {
public:
    /// The zero element over a cyclic group of prime order p.
    explicit GroupAlgebraElement(unsigned p);
    /// Element with the given coefficients on 1, s, ..., s^{p-1}.
    GroupAlgebraElement(unsigned p, std::vector<Rational> coeffs);

    unsigned order() const { return p_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    /// Coefficient of s^j (j reduced mod p).
    const Rational& coeff(long j) const;
    void set_coeff(long j, const Rational& v);

    GroupAlgebraElement operator-() const;
    friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    friend GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    /// Convolution product (s^i * s^j = s^{i+j mod p}).
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const Rational& s);
    friend GroupAlgebraElement operator*(const Rational& s, const GroupAlgebraElement& a) { return a * s; }
    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

    /// True when every coefficient lies in Z_(p) (v_p >= 0).
    bool is_p_integral() const;
    /// Minimum of v_p over all coefficients (kValInfinity for 0).
    long min_vp() const;

    /// Rendering with common content factored out, e.g.
    /// "(1/147)*(1-146*s+148*s^2)".
    std::string str() const;

private:
    unsigned p_;
    std::vector<Rational> c_;  // size p
};

}  // namespace thetalab
