#pragma once

// End-to-end verification for one (curve, p, q) triple: compute the
// normalized equivariant L-values, recognize them exactly, assemble the
// equivariant element Theta, and run the integrality / congruence /
// inverse-sum checks whose outcomes the tables report.
//
// Normalization.  With tau*(psi) the modified Gauss sum (tau*(trivial) = -1)
// and Omega the real period, the normalized values are
//     Lval(psi) = L_{{q}}(A, psi, 1) * tau*(conj(psi))^d / Omega,
// where L_{{q}} drops the Euler factor at q (an exact rational correction
// P_q(1/q) for the trivial character, no-op otherwise).  The equivariant
// element is Theta = sum_g (S_g / p) g^{-1} with S_g = sum_psi psi(g) Lval(psi).

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "thetalab/characters.hpp"
#include "thetalab/curves.hpp"
#include "thetalab/cyclotomic.hpp"
#include "thetalab/group_algebra.hpp"
#include "thetalab/mpreal.hpp"
#include "thetalab/rational.hpp"

namespace thetalab {

struct VerifyOptions {
    mpfr_prec_t precision_bits = kDefaultPrec;
    int target_digits = 12;
    mpz_class denominator_bound{100000000L};  ///< rationalization bound (1e8)
    double tolerance = 1e-8;                  ///< recognition tolerance
    std::optional<unsigned long> generator;   ///< character-convention override
    size_t cutoff_override = 0;               ///< 0 = afe_cutoff policy
    /// Coefficient supplier (cache hook): must return a 1-based vector of
    /// size M+1 with a_1..a_M.  Defaults to dirichlet_coeffs directly.
    std::function<std::vector<long long>(const CurveData&, size_t)> coefficients;
};

struct NormalizedLValue {
    unsigned j = 0;                 ///< character index (0 = trivial)
    Complex value;                  ///< numeric normalized value
    bool recognized_ok = false;
    CyclotomicElement recognized;   ///< exact value (a rational element for j = 0)
    Real residual{0L, 64};          ///< |embed(recognized) - value|

    NormalizedLValue() : recognized(3) {}
};

struct VerificationReport {
    std::string label;
    unsigned p = 0, q = 0;
    unsigned long generator = 0;  ///< generator the characters were pinned to
    std::string conductor_factored;  ///< display form of N_A, e.g. "7*61"
    std::string torsion_factored;    ///< display form of the torsion order used

    // Hypotheses of the integrality conjecture for this pair.
    bool hyp_good_at_q = false;
    bool hyp_p_torsion = false;    ///< p does not divide the relevant torsion order
    bool torsion_from_f = false;   ///< torsion order taken over F (else over Q)
    bool hyp_p_coprime_f = false;  ///< p coprime to the conductor q of the characters

    std::vector<NormalizedLValue> values;  ///< indexed by j = 0..p-1

    bool theta_ok = false;
    std::string theta_failure;   ///< recognition failure detail when !theta_ok
    GroupAlgebraElement theta;   ///< zero element when !theta_ok
    std::vector<Rational> s_values;  ///< exact S_g for g = s^a, a = 0..p-1 (empty when !theta_ok)

    bool integral_at_p = false;    ///< all Theta coefficients in Z_(p)
    bool relaxed_integral = false; ///< p^d * Theta has coefficients in Z_(p)
    bool equivariance_ok = false;  ///< recognized tuple is a Galois-conjugate family
    std::optional<long> congruence_ord;  ///< ord_frakp(Lval(psi) - Lval(triv)); kValInfinity if equal

    std::optional<bool> inverse_sum_ok;      ///< all S'_g of the inverse tuple in p Z_(p)
    std::optional<Rational> inverse_s1;      ///< S'_g at g = 1
    std::vector<Rational> inverse_s_values;  ///< exact S'_g (empty when skipped)
    std::optional<std::string> sha_note;

    std::vector<std::string> notes;  ///< quarantined anomalies, health-check detail

    // Numeric diagnostics (never part of table output).
    double max_root_number_defect = 0.0;  ///< max over evaluations of ||w| - 1|
    double max_err_estimate = 0.0;
    size_t terms_used = 0;
    double seconds = 0.0;

    VerificationReport() : theta(3) {}
};

/// Run the full pipeline for one pair.  Numeric failures inside the L-value
/// machinery throw; recognition failures are data and land in the report.
VerificationReport verify_pair(const CurveData& curve, unsigned p, unsigned q,
                               const VerifyOptions& options = {});

}  // namespace thetalab
