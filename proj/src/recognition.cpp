#include "thetalab/recognition.hpp"

#include <sstream>
#include <stdexcept>

namespace thetalab {

std::optional<Rational> rationalize(const Real& x, const mpz_class& denominator_bound, const Real& eps) {
    if (denominator_bound < 1) throw std::invalid_argument("rationalize: denominator bound must be >= 1");
    if (x.is_nan()) return std::nullopt;

    // Continued-fraction convergents h_k / k_k of x.
    const mpfr_prec_t prec = x.prec();
    Real t = x;
    // Seeds h_{-2} = 0, h_{-1} = 1, k_{-2} = 1, k_{-1} = 0 of the standard
    // convergent recurrence h_n = a_n h_{n-1} + h_{n-2}.
    mpz_class h_prev(0), h_curr(1), k_prev(1), k_curr(0);
    for (int iter = 0; iter < 20000; ++iter) {
        const mpz_class a = t.floor_to_mpz();
        const mpz_class h_next = a * h_curr + h_prev;
        const mpz_class k_next = a * k_curr + k_prev;
        if (k_next > denominator_bound) break;
        h_prev = h_curr; h_curr = h_next;
        k_prev = k_curr; k_curr = k_next;

        const Real approx = Real(h_curr, prec) / Real(k_curr, prec);
        if (abs(x - approx) < eps) {
            Rational r(h_curr, k_curr);
            r.canonicalize();
            return r;
        }
        // Next digit: t <- 1 / frac(t); stop when frac(t) is numerically 0.
        const Real frac = t - Real(a, prec);
        if (frac.is_zero() || frac.exponent() < -(static_cast<long>(prec) - 8)) break;
        t = Real(1L, prec) / frac;
    }
    return std::nullopt;
}

TupleRecognition conjugate_tuple_solve(const std::vector<Complex>& embeddings, unsigned p,
                                       const mpz_class& denominator_bound, const Real& tol) {
    TupleRecognition out;
    out.element = CyclotomicElement(p);
    if (embeddings.size() != p - 1) {
        throw std::invalid_argument("conjugate_tuple_solve: need exactly p-1 embeddings");
    }
    const size_t n = p - 1;
    mpfr_prec_t prec = kDefaultPrec;
    for (const Complex& z : embeddings) prec = std::max(prec, z.prec());

    Real scale(1L, prec);
    for (const Complex& z : embeddings) {
        const Real a = abs(z);
        if (a + 1L > scale + 0L) scale = a + 1L;
    }
    const Real threshold = tol.with_prec(prec) * scale;

    // Solve V c = x with V[k][m] = zeta_p^{(k+1)(m)} (k, m zero-based),
    // Gaussian elimination with partial pivoting on |.|^2.
    std::vector<std::vector<Complex>> A(n, std::vector<Complex>(n + 1, Complex(0L, prec)));
    const Real two_pi = Real::pi(prec) * 2L;
    for (size_t k = 0; k < n; ++k) {
        for (size_t m = 0; m < n; ++m) {
            const long e = static_cast<long>(((k + 1) * m) % p);
            A[k][m] = Complex::cis(two_pi * e / static_cast<long>(p));
        }
        A[k][n] = embeddings[k];
    }
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        Real best = abs2(A[col][col]);
        for (size_t r = col + 1; r < n; ++r) {
            const Real cand = abs2(A[r][col]);
            if (cand > best) { best = cand; pivot = r; }
        }
        if (best.is_zero()) {
            out.failure = "embedding matrix is singular (duplicate embeddings?)";
            return out;
        }
        std::swap(A[col], A[pivot]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const Complex factor = A[r][col] / A[col][col];
            for (size_t cc = col; cc <= n; ++cc) A[r][cc] -= factor * A[col][cc];
        }
    }
    std::vector<Complex> c;
    c.reserve(n);
    for (size_t m = 0; m < n; ++m) c.push_back(A[m][n] / A[m][m]);

    // The solution must be real (it is a vector of rationals when the tuple
    // really is a conjugate family).
    Real worst_im(0L, prec);
    for (const Complex& cm : c) {
        const Real a = abs(cm.im);
        if (a > worst_im) worst_im = a;
    }
    if (worst_im > threshold) {
        out.failure = "imaginary part exceeds tolerance (|Im| = " + worst_im.str(3) + ")";
        return out;
    }

    std::vector<Rational> coeffs(n);
    for (size_t m = 0; m < n; ++m) {
        const auto r = rationalize(c[m].re, denominator_bound, threshold);
        if (!r) {
            out.failure = "rationalization failed at basis index " + std::to_string(m);
            return out;
        }
        coeffs[m] = *r;
    }
    CyclotomicElement alpha(p, coeffs);

    // Independent confirmation: re-embed the exact candidate at every k.
    Real worst(0L, prec);
    for (size_t k = 0; k < n; ++k) {
        const Complex back = alpha.embed(static_cast<unsigned>(k + 1), prec);
        const Real r = abs(back - embeddings[k]);
        if (r > worst) worst = r;
    }
    out.residual = worst;
    if (worst > threshold) {
        out.failure = "embedding residual exceeds tolerance (residual = " + worst.str(3) + ")";
        return out;
    }
    out.ok = true;
    out.element = std::move(alpha);
    return out;
}

Complex sg_sum(const Complex& x_triv, const std::vector<Complex>& twisted, unsigned p, long g_exp) {
    if (twisted.size() != p - 1) throw std::invalid_argument("sg_sum: need exactly p-1 twisted values");
    mpfr_prec_t prec = x_triv.prec();
    for (const Complex& z : twisted) prec = std::max(prec, z.prec());
    Complex total = Complex(x_triv.re.with_prec(prec), x_triv.im.with_prec(prec));
    const Real two_pi = Real::pi(prec) * 2L;
    long g = g_exp % static_cast<long>(p);
    if (g < 0) g += p;
    for (unsigned k = 1; k < p; ++k) {
        const long e = (static_cast<long>(k) * g) % static_cast<long>(p);
        total += Complex::cis(two_pi * e / static_cast<long>(p)) * twisted[k - 1];
    }
    return total;
}

std::optional<GroupAlgebraElement> theta_assemble(const Complex& x_triv, const std::vector<Complex>& twisted,
                                                  unsigned p, const mpz_class& denominator_bound,
                                                  const Real& tol, std::string* failure) {
    mpfr_prec_t prec = x_triv.prec();
    for (const Complex& z : twisted) prec = std::max(prec, z.prec());
    Real scale(1L, prec);
    {
        const Real a = abs(x_triv);
        if (a + 1L > scale) scale = a + 1L;
    }
    for (const Complex& z : twisted) {
        const Real a = abs(z);
        if (a + 1L > scale) scale = a + 1L;
    }
    const Real threshold = tol.with_prec(prec) * scale;

    GroupAlgebraElement theta(p);
    for (unsigned a = 0; a < p; ++a) {
        const Complex s = sg_sum(x_triv, twisted, p, static_cast<long>(a));
        if (abs(s.im) > threshold) {
            if (failure) {
                *failure = "S_g has nonvanishing imaginary part at g = s^" + std::to_string(a) +
                           " (|Im| = " + abs(s.im).str(3) + ")";
            }
            return std::nullopt;
        }
        const auto r = rationalize(s.re / static_cast<long>(p), denominator_bound, threshold);
        if (!r) {
            if (failure) *failure = "rationalization of S_g / p failed at g = s^" + std::to_string(a);
            return std::nullopt;
        }
        // Coefficient of g^{-1} = s^{-a}.
        theta.set_coeff(-static_cast<long>(a), *r);
    }
    return theta;
}

}  // namespace thetalab
