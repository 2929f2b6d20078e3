#pragma once

// Exact rational arithmetic helpers on top of GMP's mpq_class, plus the
// p-adic valuation and a small "factored integer" renderer used by the
// table output (e.g. 8/343 prints as "2^3*7^-3").

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>

#include "thetalab/mpreal.hpp"

namespace thetalab {

using Rational = mpq_class;

/// Sentinel for the valuation of 0 (v_p(0) = +infinity).
inline constexpr long kValInfinity = std::numeric_limits<long>::max();

/// Exact p-adic valuation of a nonzero integer.
long vp_integer(const mpz_class& n, unsigned long p);

/// Exact p-adic valuation v_p(r) of a rational; returns kValInfinity for 0.
long vp_rational(const Rational& r, unsigned long p);

/// True when r lies in the localization Z_(p), i.e. v_p(r) >= 0.
inline bool is_p_integral(const Rational& r, unsigned long p) {
    return vp_rational(r, p) >= 0;
}

/// Exact rational from a decimal string such as "-3/49" or "17".
Rational rational_from_string(const std::string& s);

/// Round-to-nearest conversion at the given precision.
inline Real to_real(const Rational& r, mpfr_prec_t prec) { return Real(r, prec); }

/// Plain rendering "num/den" ("num" when den = 1).
std::string rational_str(const Rational& r);

/// Factored rendering of a rational into prime powers with signed exponents,
/// e.g. -8/343 -> "-2^3*7^-3", 1 -> "1", 0 -> "0".  Primes are found by
/// trial division; factors above `limit` are kept as-is (they never occur in
/// the magnitudes this lab prints, but the renderer must not loop forever).
std::string factored_str(const Rational& r, unsigned long limit = 1000000);

}  // namespace thetalab
