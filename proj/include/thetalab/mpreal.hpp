#pragma once

// Thin RAII wrappers over MPFR: an arbitrary-precision real type `Real` and
// a complex type `Complex` built from two of them.
//
// Design notes:
//  - Every value carries its own precision (in bits).  Binary operations
//    compute at the larger of the two operand precisions, so precision is
//    "sticky": seeding a computation at 192 bits keeps it there.
//  - Rounding is always to nearest (MPFR_RNDN).
//  - Only the operations the lab needs are wrapped; this is not a general
//    purpose numeric tower.

#include <mpfr.h>
#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

namespace thetalab {

/// Default working precision (bits) for newly created values when no
/// explicit precision is given.  The verification pipeline threads an
/// explicit precision everywhere; the default exists for convenience in
/// tests and small utilities.
inline constexpr mpfr_prec_t kDefaultPrec = 192;

class Real {
public:
    explicit Real(mpfr_prec_t prec = kDefaultPrec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(long n, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, n, MPFR_RNDN); }
    Real(double d, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, d, MPFR_RNDN); }
    Real(const mpz_class& z, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
    Real(const mpq_class& q, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
    /// Parse a decimal string (e.g. "1.02040816...e-2") at the given precision.
    Real(const std::string& s, mpfr_prec_t prec);

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 53); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    /// Copy of this value rounded to precision `p`.
    Real with_prec(mpfr_prec_t p) const { Real r(p); mpfr_set(r.v_, v_, MPFR_RNDN); return r; }

    // Raw handle access, for the few call sites that talk to MPFR directly.
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    bool is_nan() const { return mpfr_nan_p(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    /// Nearest integer as an exact mpz.
    mpz_class round_to_mpz() const;
    /// Floor as an exact mpz.
    mpz_class floor_to_mpz() const;
    /// Decimal rendering with `digits` significant digits.
    std::string str(size_t digits = 20) const;

    Real operator-() const { Real r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    friend Real operator+(const Real& a, const Real& b) { Real r(join(a, b)); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a, const Real& b) { Real r(join(a, b)); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator*(const Real& a, const Real& b) { Real r(join(a, b)); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator/(const Real& a, const Real& b) { Real r(join(a, b)); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }

    friend Real operator+(const Real& a, long b) { Real r(a.prec()); mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a, long b) { Real r(a.prec()); mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator*(const Real& a, long b) { Real r(a.prec()); mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator/(const Real& a, long b) { Real r(a.prec()); mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator+(long a, const Real& b) { return b + a; }
    friend Real operator-(long a, const Real& b) { Real r(b.prec()); mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN); return r; }
    friend Real operator/(long a, const Real& b) { Real r(b.prec()); mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN); return r; }

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(long n) { mpfr_mul_si(v_, v_, n, MPFR_RNDN); return *this; }
    Real& operator/=(long n) { mpfr_div_si(v_, v_, n, MPFR_RNDN); return *this; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }

    friend Real abs(const Real& a) { Real r(a.prec()); mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r; }
    friend Real sqrt(const Real& a) { Real r(a.prec()); mpfr_sqrt(r.v_, a.v_, MPFR_RNDN); return r; }
    friend Real exp(const Real& a) { Real r(a.prec()); mpfr_exp(r.v_, a.v_, MPFR_RNDN); return r; }
    friend Real log(const Real& a) { Real r(a.prec()); mpfr_log(r.v_, a.v_, MPFR_RNDN); return r; }
    friend Real sin(const Real& a) { Real r(a.prec()); mpfr_sin(r.v_, a.v_, MPFR_RNDN); return r; }
    friend Real cos(const Real& a) { Real r(a.prec()); mpfr_cos(r.v_, a.v_, MPFR_RNDN); return r; }
    friend Real atan(const Real& a) { Real r(a.prec()); mpfr_atan(r.v_, a.v_, MPFR_RNDN); return r; }
    friend Real pow_si(const Real& a, long e) { Real r(a.prec()); mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN); return r; }

    /// log2 of |x| as a rough magnitude probe; very negative for tiny x.
    long exponent() const { return is_zero() ? INT32_MIN : mpfr_get_exp(v_); }

    static Real pi(mpfr_prec_t prec) { Real r(prec); mpfr_const_pi(r.raw(), MPFR_RNDN); return r; }
    static Real euler_gamma(mpfr_prec_t prec) { Real r(prec); mpfr_const_euler(r.raw(), MPFR_RNDN); return r; }
    static Real ln2(mpfr_prec_t prec) { Real r(prec); mpfr_const_log2(r.raw(), MPFR_RNDN); return r; }

private:
    static mpfr_prec_t join(const Real& a, const Real& b) {
        return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
    }
    mpfr_t v_;
};

/// Complex numbers as pairs of `Real`s.  Only the field operations, the
/// conjugation, and polar helpers needed by the L-value pipeline exist.
class Complex {
public:
    Real re, im;

    explicit Complex(mpfr_prec_t prec = kDefaultPrec) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(long r, mpfr_prec_t prec) : re(r, prec), im(0L, prec) {}
    explicit Complex(const Real& r) : re(r), im(0L, r.prec()) {}

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }

    /// e^{i t}
    static Complex cis(const Real& t) { return Complex(cos(t), sin(t)); }

    Complex operator-() const { return Complex(-re, -im); }
    friend Complex operator+(const Complex& a, const Complex& b) { return Complex(a.re + b.re, a.im + b.im); }
    friend Complex operator-(const Complex& a, const Complex& b) { return Complex(a.re - b.re, a.im - b.im); }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend Complex operator*(const Complex& a, const Real& s) { return Complex(a.re * s, a.im * s); }
    friend Complex operator*(const Real& s, const Complex& a) { return a * s; }
    friend Complex operator*(const Complex& a, long s) { return Complex(a.re * s, a.im * s); }
    friend Complex operator/(const Complex& a, const Real& s) { return Complex(a.re / s, a.im / s); }
    friend Complex operator/(const Complex& a, long s) { return Complex(a.re / s, a.im / s); }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real n = b.re * b.re + b.im * b.im;
        return Complex((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
    }
    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }

    friend Complex conj(const Complex& a) { return Complex(a.re, -a.im); }
    friend Real abs2(const Complex& a) { return a.re * a.re + a.im * a.im; }
    friend Real abs(const Complex& a) { return sqrt(abs2(a)); }

    std::string str(size_t digits = 20) const;
};

}  // namespace thetalab
