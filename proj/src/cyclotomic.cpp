#include "thetalab/cyclotomic.hpp"

#include <cassert>
#include <stdexcept>

namespace thetalab {

namespace {

bool is_small_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

CyclotomicElement::CyclotomicElement(unsigned p) : p_(p), c_(p - 1, Rational(0)) {
    if (!is_small_prime(p)) throw std::invalid_argument("CyclotomicElement: order must be prime");
}

CyclotomicElement::CyclotomicElement(unsigned p, const Rational& c, long k)
    : CyclotomicElement(p) {
    Rational cc(c);
    cc.canonicalize();
    long kk = k % static_cast<long>(p);
    if (kk < 0) kk += p;
    if (kk == static_cast<long>(p) - 1) {
        // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
        for (auto& ci : c_) ci = -cc;
    } else {
        c_[static_cast<size_t>(kk)] = cc;
    }
}

CyclotomicElement::CyclotomicElement(unsigned p, std::vector<Rational> coeffs)
    : CyclotomicElement(p) {
    if (coeffs.size() != p - 1)
        throw std::invalid_argument("CyclotomicElement: expected p-1 coefficients");
    // mpq arithmetic assumes canonical form; enforce it at this boundary so
    // hand-built mpq_class(n, d) inputs cannot poison later comparisons.
    for (auto& ci : coeffs) ci.canonicalize();
    c_ = std::move(coeffs);
}

bool CyclotomicElement::is_zero() const {
    for (const auto& ci : c_)
        if (ci != 0) return false;
    return true;
}

bool CyclotomicElement::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational CyclotomicElement::to_rational() const {
    if (!is_rational()) throw std::domain_error("CyclotomicElement: not a rational value");
    return c_[0];
}

CyclotomicElement CyclotomicElement::operator-() const {
    CyclotomicElement r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("CyclotomicElement: mixed field orders");
    CyclotomicElement r(a.p_);
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("CyclotomicElement: mixed field orders");
    CyclotomicElement r(a.p_);
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
}

void CyclotomicElement::reduce_exponent_inplace(std::vector<Rational>& raw) const {
    // raw holds coefficients on 1, zeta, ..., zeta^{p-1}; eliminate the top
    // power via zeta^{p-1} = -(1 + ... + zeta^{p-2}).
    assert(raw.size() == p_);
    const Rational top = raw[p_ - 1];
    for (size_t i = 0; i + 1 < p_; ++i) raw[i] -= top;
    raw.pop_back();
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("CyclotomicElement: mixed field orders");
    const unsigned p = a.p_;
    // Multiply with exponents mod p (zeta^p = 1), then knock out zeta^{p-1}.
    std::vector<Rational> raw(p, Rational(0));
    for (size_t i = 0; i < p - 1; ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < p - 1; ++j) {
            if (b.c_[j] == 0) continue;
            raw[(i + j) % p] += a.c_[i] * b.c_[j];
        }
    }
    CyclotomicElement r(p);
    r.reduce_exponent_inplace(raw);
    r.c_ = std::move(raw);
    return r;
}

CyclotomicElement operator*(const CyclotomicElement& a, const Rational& s) {
    CyclotomicElement r(a.p_);
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] * s;
    return r;
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
}

CyclotomicElement CyclotomicElement::galois_apply(long k) const {
    long kk = k % static_cast<long>(p_);
    if (kk < 0) kk += p_;
    if (kk == 0) throw std::invalid_argument("galois_apply: exponent divisible by p");
    std::vector<Rational> raw(p_, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        raw[(i * static_cast<size_t>(kk)) % p_] += c_[i];
    CyclotomicElement r(p_);
    reduce_exponent_inplace(raw);
    r.c_ = std::move(raw);
    return r;
}

Rational CyclotomicElement::norm() const {
    // Determinant of the multiplication-by-alpha operator on the power
    // basis, computed by exact Gaussian elimination.  Columns are
    // alpha * zeta^j for j = 0..p-2.
    const unsigned n = p_ - 1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    CyclotomicElement col = *this;
    const CyclotomicElement zeta(p_, Rational(1), 1);
    for (unsigned j = 0; j < n; ++j) {
        for (unsigned i = 0; i < n; ++i) m[i][j] = col.c_[i];
        if (j + 1 < n) col = col * zeta;
    }

    Rational det(1);
    for (unsigned k = 0; k < n; ++k) {
        unsigned pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (unsigned i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rational f = m[i][k] / m[k][k];
            for (unsigned j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

long CyclotomicElement::ord_frakp() const {
    if (is_zero()) return kValInfinity;
    // frak_p is the unique prime above p, totally ramified with f = 1, so
    // v_p(Norm(alpha)) counts ord_frakp(alpha) exactly once.
    return vp_rational(norm(), p_);
}

long ord_frakp_rational(const Rational& r, unsigned p) {
    if (r == 0) return kValInfinity;
    return (static_cast<long>(p) - 1) * vp_rational(r, p);
}

Complex CyclotomicElement::embed(long k, mpfr_prec_t prec) const {
    long kk = k % static_cast<long>(p_);
    if (kk < 0) kk += p_;
    const Real two_pi_over_p = Real::pi(prec) * 2L / static_cast<long>(p_);
    Complex acc(prec);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const long e = static_cast<long>((i * static_cast<size_t>(kk)) % p_);
        acc += Complex::cis(two_pi_over_p * e) * Real(c_[i], prec);
    }
    return acc;
}

std::string CyclotomicElement::str() const {
    if (is_zero()) return "0";

    // Content: gcd of numerators over lcm of denominators, signed so the
    // first nonzero remaining coefficient is positive.
    mpz_class g(0), l(1);
    for (const auto& ci : c_) {
        if (ci == 0) continue;
        mpz_class num = abs(ci.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ci.get_den().get_mpz_t());
    }
    Rational content(g, l);
    content.canonicalize();
    for (const auto& ci : c_) {
        if (ci != 0) {
            if (ci < 0) content = -content;
            break;
        }
    }

    std::vector<mpz_class> ints(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        Rational t = c_[i] / content;
        assert(t.get_den() == 1);
        ints[i] = t.get_num();
    }

    std::string inner;
    int terms = 0;
    for (size_t i = 0; i < ints.size(); ++i) {
        if (ints[i] == 0) continue;
        std::string coeff = mpz_class(abs(ints[i])).get_str();
        std::string mono = (i == 0) ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
        std::string body;
        if (mono.empty()) body = coeff;
        else if (coeff == "1") body = mono;
        else body = coeff + "*" + mono;
        if (terms == 0) inner = (ints[i] < 0 ? "-" : "") + body;
        else inner += (ints[i] < 0 ? "-" : "+") + body;
        ++terms;
    }

    if (content == 1) return inner;
    if (content == -1) return terms > 1 ? "-(" + inner + ")" : "-" + inner;
    std::string cs = rational_str(content);
    std::string prefix = (content.get_den() != 1) ? "(" + cs + ")" : cs;
    return terms > 1 ? prefix + "*(" + inner + ")" : prefix + "*" + inner;
}

}  // namespace thetalab
