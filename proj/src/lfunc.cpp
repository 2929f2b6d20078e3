#include "thetalab/lfunc.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "thetalab/kernels.hpp"

namespace thetalab {

size_t afe_cutoff(const mpz_class& N, int d, int target_digits) {
    if (d != 1 && d != 2) throw std::invalid_argument("afe_cutoff: d must be 1 or 2");
    if (target_digits < 1) throw std::invalid_argument("afe_cutoff: target_digits must be positive");
    const double D = static_cast<double>(target_digits) + 2.0;
    const double ratio = D * std::log(10.0) / (2.0 * std::acos(-1.0) * d);
    const double scale = d == 1 ? ratio : ratio * ratio;
    const double m = std::sqrt(N.get_d()) * scale;
    const double rounded = std::ceil(m);
    if (rounded > 5e8) throw std::domain_error("afe_cutoff: conductor too large for this configuration");
    size_t M = 2 * static_cast<size_t>(rounded);
    return std::max<size_t>(M, 16);
}

AfeKernelTable afe_kernel_table(const mpz_class& N, int d, mpfr_prec_t prec, size_t M) {
    if (d != 1 && d != 2) throw std::invalid_argument("afe_kernel_table: d must be 1 or 2");
    if (N <= 0) throw std::invalid_argument("afe_kernel_table: conductor must be positive");
    AfeKernelTable t;
    t.d = d;
    t.N = N;
    t.prec = prec;
    t.M = M;
    t.sqrt_n = sqrt(Real(N, prec + 16));
    t.w_lo.reserve(M + 1);
    t.w_mid.reserve(M + 1);
    t.w_hi.reserve(M + 1);
    const Real zero(0L, prec);
    t.w_lo.push_back(zero);
    t.w_mid.push_back(zero);
    t.w_hi.push_back(zero);

    // Per-term working precision: the kernel at argument y sits around
    // 2^{-bits(y)} with bits(y) = 2 pi y log2(e) (d = 1) or
    // 4 pi sqrt(y) log2(e) (d = 2); terms that far below 1 only need enough
    // precision to land their leading digits beyond our absolute floor.
    const double log2e = 1.4426950408889634;
    const double sqrtN = t.sqrt_n.to_double();
    const double two_pi = 2.0 * std::acos(-1.0);
    auto bits_below = [&](double y) {
        return d == 1 ? two_pi * y * log2e : 2.0 * two_pi * std::sqrt(y) * log2e;
    };

    const double scales[3] = {5.0 / 6.0, 1.0, 6.0 / 5.0};
    const Real c_lo(Rational(5, 6), prec + 16);
    const Real c_hi(Rational(6, 5), prec + 16);
    size_t n = 1;
    for (; n <= M; ++n) {
        const double y_lo = scales[0] * n / sqrtN;
        if (bits_below(y_lo) > static_cast<double>(prec) + 80.0) break;  // every later term underflows
        const Real nn(static_cast<long>(n), prec + 16);
        const Real y_mid_r = nn / t.sqrt_n;
        const Real y_lo_r = c_lo * y_mid_r;
        const Real y_hi_r = c_hi * y_mid_r;
        const Real pref = t.sqrt_n / nn;
        for (int s = 0; s < 3; ++s) {
            const double y = scales[s] * n / sqrtN;
            const double drop = bits_below(y);
            mpfr_prec_t eff = prec;
            if (drop > 0) {
                const double want = static_cast<double>(prec) + 16.0 - drop;
                eff = static_cast<mpfr_prec_t>(std::max(64.0, want));
            }
            const Real& y_r = s == 0 ? y_lo_r : (s == 1 ? y_mid_r : y_hi_r);
            const Real w = pref * kernel_tail(y_r.with_prec(std::min<mpfr_prec_t>(eff + 16, prec + 16)), 0, d, eff);
            if (s == 0) t.w_lo.push_back(w);
            else if (s == 1) t.w_mid.push_back(w);
            else t.w_hi.push_back(w);
        }
    }
    t.effective = n - 1;
    return t;
}

namespace {

/// S(c) for one character from bucketed real sums: terms with the same
/// character exponent share a real accumulator, and the p phases are applied
/// once at the end.  For the untwisted series there is a single bucket.
Complex bucket_sum(const std::vector<Real>& w, const std::vector<long long>& coeffs,
                   const DirichletCharacter* psi, size_t limit, mpfr_prec_t prec) {
    const unsigned p = psi ? psi->p() : 1;
    std::vector<Real> bucket(p, Real(0L, prec));
    for (size_t n = 1; n <= limit; ++n) {
        const long long a = coeffs[n];
        if (a == 0) continue;
        unsigned e = 0;
        if (psi) {
            const auto ex = psi->exponent(static_cast<long>(n));
            if (!ex) continue;  // q | n
            e = *ex;
        }
        bucket[e] = bucket[e] + w[n] * static_cast<long>(a);
    }
    if (!psi) return Complex(bucket[0], Real(0L, prec));
    Complex total(Real(0L, prec), Real(0L, prec));
    const Real two_pi = Real::pi(prec + 8) * Real(2L, prec + 8);
    for (unsigned e = 0; e < p; ++e) {
        if (bucket[e].is_zero()) continue;
        const Real angle = two_pi * Real(static_cast<long>(e), prec + 8) / Real(static_cast<long>(p), prec + 8);
        total = total + Complex::cis(angle.with_prec(prec)) * bucket[e];
    }
    return total;
}

}  // namespace

LValueResult lvalue_s1_with(const AfeKernelTable& table, const std::vector<long long>& coeffs,
                            const DirichletCharacter* psi) {
    if (psi && psi->is_trivial()) {
        throw std::invalid_argument(
            "lvalue_s1_with: trivial character rejected; evaluate untwisted and apply the exact "
            "truncation factor instead");
    }
    const size_t limit = std::min(table.effective, coeffs.size() > 0 ? coeffs.size() - 1 : 0);
    if (limit < table.effective) {
        throw std::invalid_argument("lvalue_s1_with: coefficient list shorter than the kernel table");
    }
    const mpfr_prec_t prec = table.prec;
    const Complex s_lo = bucket_sum(table.w_lo, coeffs, psi, table.effective, prec);
    const Complex s_mid = bucket_sum(table.w_mid, coeffs, psi, table.effective, prec);
    const Complex s_hi = bucket_sum(table.w_hi, coeffs, psi, table.effective, prec);

    // Splits t = 1 and t = 6/5:  S(1) + w conj(S(1)) = S(6/5) + w conj(S(5/6)).
    const Complex num = s_mid - s_hi;
    const Complex den = conj(s_lo) - conj(s_mid);
    LValueResult out;
    out.terms_used = table.effective;
    if (abs2(den).is_zero()) {
        // Degenerate solve (identically matched splits): fall back to w = 1,
        // the residual check below will expose any inconsistency.
        out.root_number = Complex(Real(1L, prec), Real(0L, prec));
    } else {
        out.root_number = num / den;
    }
    const Complex lambda = s_mid + out.root_number * conj(s_mid);
    const Complex lambda_alt = s_lo + out.root_number * conj(s_hi);
    out.err_estimate = abs(lambda_alt - lambda);

    const Real two_pi = Real::pi(prec) * Real(2L, prec);
    Real gamma_scale = two_pi;
    for (int i = 1; i < table.d; ++i) gamma_scale = gamma_scale * two_pi;
    const Real factor = gamma_scale / table.sqrt_n.with_prec(prec);
    out.value = lambda * factor;
    return out;
}

LValueResult lvalue_s1(const TwistedLSpec& spec) {
    if (!spec.coeffs) throw std::invalid_argument("lvalue_s1: coefficient pointer not set");
    const size_t M = spec.cutoff_override ? spec.cutoff_override : afe_cutoff(spec.N, spec.d, spec.target_digits);
    if (spec.coeffs->size() < M + 1) {
        throw std::invalid_argument("lvalue_s1: need coefficients a_1..a_M with M = " + std::to_string(M) +
                                    ", got " + std::to_string(spec.coeffs->size() ? spec.coeffs->size() - 1 : 0));
    }

    // Kernel weights depend only on (N, d, prec, M) and are expensive
    // (thousands of Bessel evaluations), while batch runs evaluate many
    // characters and candidate coefficient sets against the same conductor.
    // Keep the most recent tables around.
    struct CacheSlot {
        mpz_class N;
        int d = 0;
        mpfr_prec_t prec = 0;
        size_t M = 0;
        std::shared_ptr<const AfeKernelTable> table;
    };
    static std::mutex cache_mutex;
    static std::deque<CacheSlot> cache;
    std::shared_ptr<const AfeKernelTable> table;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        for (auto it = cache.begin(); it != cache.end(); ++it) {
            if (it->N == spec.N && it->d == spec.d && it->prec == spec.precision_bits && it->M == M) {
                table = it->table;
                if (it != cache.begin()) {
                    CacheSlot slot = *it;
                    cache.erase(it);
                    cache.push_front(std::move(slot));
                }
                break;
            }
        }
    }
    if (!table) {
        auto built = std::make_shared<const AfeKernelTable>(
            afe_kernel_table(spec.N, spec.d, spec.precision_bits, M));
        std::lock_guard<std::mutex> lock(cache_mutex);
        cache.push_front(CacheSlot{spec.N, spec.d, spec.precision_bits, M, built});
        while (cache.size() > 4) cache.pop_back();
        table = built;
    }
    return lvalue_s1_with(*table, *spec.coeffs, spec.psi);
}

mpz_class twisted_conductor(const CurveData& curve, unsigned long q) {
    auto it = curve.twist_conductor.find(q);
    if (it != curve.twist_conductor.end()) return it->second;
    mpz_class prime_to_q = curve.conductor;
    while (mpz_divisible_ui_p(prime_to_q.get_mpz_t(), q)) mpz_divexact_ui(prime_to_q.get_mpz_t(), prime_to_q.get_mpz_t(), q);
    mpz_class qpow;
    mpz_ui_pow_ui(qpow.get_mpz_t(), q, 2 * static_cast<unsigned long>(curve.genus));
    return prime_to_q * qpow;
}

Rational truncation_factor(const CurveData& curve, unsigned long q, bool* used_bad) {
    const bool bad = !curve.is_good(q);
    if (used_bad) *used_bad = bad;
    return euler_factor(curve, q).at_inverse_ell();
}

}  // namespace thetalab
