#include "thetalab/mpreal.hpp"

#include <stdexcept>
#include <vector>

namespace thetalab {

Real::Real(const std::string& s, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw std::invalid_argument("Real: cannot parse '" + s + "' as a decimal number");
    }
}

mpz_class Real::round_to_mpz() const {
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(v_));
    mpfr_round(t, v_);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDN);
    mpfr_clear(t);
    return z;
}

mpz_class Real::floor_to_mpz() const {
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(v_));
    mpfr_floor(t, v_);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDN);
    mpfr_clear(t);
    return z;
}

std::string Real::str(size_t digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_zero_p(v_)) return "0";
    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);

    bool neg = !mant.empty() && mant[0] == '-';
    std::string d = neg ? mant.substr(1) : mant;
    // mpfr convention: value = 0.d1d2... * 10^e.  Render as d1.d2... e(e-1).
    std::string out = d.substr(0, 1);
    if (d.size() > 1) out += "." + d.substr(1);
    long ee = static_cast<long>(e) - 1;
    if (ee != 0) out += "e" + std::to_string(ee);
    return (neg ? "-" : "") + out;
}

std::string Complex::str(size_t digits) const {
    return re.str(digits) + (im.sign() < 0 ? " - " : " + ") + abs(im).str(digits) + "i";
}

}  // namespace thetalab
