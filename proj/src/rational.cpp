#include "thetalab/rational.hpp"

#include <stdexcept>
#include <vector>

namespace thetalab {

long vp_integer(const mpz_class& n, unsigned long p) {
    if (n == 0) return kValInfinity;
    if (p < 2) throw std::invalid_argument("vp_integer: p must be >= 2");
    mpz_class q, r, m(n);
    long v = 0;
    mpz_class pz(static_cast<unsigned long>(p));
    while (true) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t());
        if (r != 0) break;
        m = q;
        ++v;
    }
    return v;
}

long vp_rational(const Rational& r, unsigned long p) {
    if (r == 0) return kValInfinity;
    return vp_integer(r.get_num(), p) - vp_integer(r.get_den(), p);
}

Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("rational_from_string: cannot parse '" + s + "'");
    r.canonicalize();
    return r;
}

std::string rational_str(const Rational& r) {
    return r.get_str();
}

std::string factored_str(const Rational& r, unsigned long limit) {
    if (r == 0) return "0";
    std::string sign = (r < 0) ? "-" : "";

    // Collect (prime, exponent) with positive exponents from the numerator
    // and negative ones from the denominator.
    std::vector<std::pair<mpz_class, long>> factors;
    auto accumulate = [&](mpz_class n, int expo_sign) {
        n = abs(n);
        for (unsigned long p = 2; n > 1 && p <= limit; p += (p == 2) ? 1 : 2) {
            if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                long e = 0;
                while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                    ++e;
                }
                factors.emplace_back(mpz_class(p), expo_sign * e);
            }
            // Stop trial division once p^2 exceeds the remainder.
            mpz_class p2 = mpz_class(p) * mpz_class(p);
            if (p2 > n && n > 1) {
                factors.emplace_back(n, expo_sign);
                n = 1;
            }
        }
        if (n > 1) factors.emplace_back(n, expo_sign);  // cofactor beyond limit
    };
    accumulate(r.get_num(), +1);
    accumulate(r.get_den(), -1);

    if (factors.empty()) return sign + "1";
    std::string out = sign;
    bool first = true;
    for (const auto& [p, e] : factors) {
        if (!first) out += "*";
        first = false;
        out += p.get_str();
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace thetalab
