#include "thetalab/curves.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace thetalab {

namespace {

long coeff_at(const std::vector<long>& v, size_t i) {
    return i < v.size() ? v[i] : 0;
}

int poly_degree(const std::vector<long>& v) {
    for (size_t i = v.size(); i-- > 0;) {
        if (v[i] != 0) return static_cast<int>(i);
    }
    return -1;
}

unsigned long mod_ul(long v, unsigned long ell) {
    long m = v % static_cast<long>(ell);
    if (m < 0) m += static_cast<long>(ell);
    return static_cast<unsigned long>(m);
}

/// Descending-power display of an integer polynomial in `var`.
std::string poly_str(const std::vector<long>& coeffs, const std::string& var) {
    int deg = poly_degree(coeffs);
    if (deg < 0) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = deg; i >= 0; --i) {
        long c = coeff_at(coeffs, static_cast<size_t>(i));
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        long ac = std::labs(c);
        if (ac != 1 || i == 0) out << ac;
        if (i >= 1) {
            if (ac != 1) out << "*";
            out << var;
            if (i >= 2) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

/// Exact determinant of a square mpz matrix by Bareiss fraction-free
/// elimination (all divisions exact).
mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

/// Resultant Res(a, a') for a of exact degree n, via the Sylvester matrix.
mpz_class resultant_with_derivative(const std::vector<mpz_class>& a) {
    const int n = static_cast<int>(a.size()) - 1;  // exact degree
    std::vector<mpz_class> da(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) da[static_cast<size_t>(i - 1)] = mpz_class(i) * a[static_cast<size_t>(i)];
    const int m = n - 1;
    const size_t dim = static_cast<size_t>(n + m);
    std::vector<std::vector<mpz_class>> syl(dim, std::vector<mpz_class>(dim, mpz_class(0)));
    // m rows of a (descending), then n rows of a'.
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i)
            syl[static_cast<size_t>(r)][static_cast<size_t>(r + i)] = a[static_cast<size_t>(n - i)];
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i)
            syl[static_cast<size_t>(m + r)][static_cast<size_t>(r + i)] = da[static_cast<size_t>(m - i)];
    return bareiss_det(std::move(syl));
}

/// Discriminant of the binary sextic with coefficient vector g (ascending,
/// size 7, possibly with vanishing top coefficients).  Uses invariance under
/// integral unimodular substitutions to reach a representative of exact
/// degree 6.
mpz_class binary_sextic_disc(std::vector<mpz_class> g) {
    g.resize(7, mpz_class(0));
    // Shift x -> x + c until g(c) != 0, then reverse coefficients so the
    // leading coefficient becomes g(c).
    long shift = 0;
    auto eval_at = [&](long c) {
        mpz_class acc = 0;
        for (size_t i = 7; i-- > 0;) acc = acc * c + g[i];
        return acc;
    };
    const long candidates[] = {0, 1, -1, 2, -2, 3, -3, 4, -4};
    bool found = false;
    for (long c : candidates) {
        if (eval_at(c) != 0) { shift = c; found = true; break; }
    }
    if (!found) throw std::invalid_argument("binary_sextic_disc: form has too many integer roots (not squarefree)");
    if (shift != 0) {
        // Taylor shift g(x) -> g(x + shift) by iterated synthetic division.
        for (int k = 0; k < 6; ++k)
            for (int j = 5; j >= k; --j)
                g[static_cast<size_t>(j)] += shift * g[static_cast<size_t>(j + 1)];
    }
    std::reverse(g.begin(), g.end());  // leading coefficient now nonzero
    while (g.size() > 1 && g.back() == 0) g.pop_back();
    if (g.size() != 7) throw std::logic_error("binary_sextic_disc: lost degree after substitution");
    mpz_class res = resultant_with_derivative(g);
    // disc = (-1)^{n(n-1)/2} Res(a, a') / lc(a) with n = 6.
    mpz_class disc;
    mpz_divexact(disc.get_mpz_t(), res.get_mpz_t(), g.back().get_mpz_t());
    return -disc;
}

struct BInvariants {
    long b2, b4, b6;
    mpz_class b8, disc;
};

BInvariants b_invariants(const CurveData& curve) {
    const long a1 = coeff_at(curve.h, 1), a3 = coeff_at(curve.h, 0);
    const long a2 = coeff_at(curve.f, 2), a4 = coeff_at(curve.f, 1), a6 = coeff_at(curve.f, 0);
    BInvariants b{};
    b.b2 = a1 * a1 + 4 * a2;
    b.b4 = 2 * a4 + a1 * a3;
    b.b6 = a3 * a3 + 4 * a6;
    b.b8 = mpz_class(a1) * a1 * a6 + mpz_class(4) * a2 * a6 - mpz_class(a1) * a3 * a4 +
           mpz_class(a2) * a3 * a3 - mpz_class(a4) * a4;
    mpz_class b2z(b.b2), b4z(b.b4), b6z(b.b6);
    b.disc = -b2z * b2z * b.b8 - 8 * b4z * b4z * b4z - 27 * b6z * b6z + 9 * b2z * b4z * b6z;
    return b;
}

// ---------------------------------------------------------------------------
// Point counting helpers
// ---------------------------------------------------------------------------

/// #C(F_ell) for odd good ell via a quadratic-character table.
long long count_f_ell_odd(const CurveData& curve, unsigned long ell) {
    std::vector<int8_t> chi(ell, -1);
    chi[0] = 0;
    for (unsigned long t = 1; t <= ell / 2; ++t) chi[(t * t) % ell] = 1;

    const int dh = poly_degree(curve.h), df = poly_degree(curve.f);
    unsigned long hm[4] = {0, 0, 0, 0}, fm[7] = {0, 0, 0, 0, 0, 0, 0};
    for (int i = 0; i <= dh; ++i) hm[i] = mod_ul(coeff_at(curve.h, static_cast<size_t>(i)), ell);
    for (int i = 0; i <= df; ++i) fm[i] = mod_ul(coeff_at(curve.f, static_cast<size_t>(i)), ell);

    long long total = 0;
    for (unsigned long x = 0; x < ell; ++x) {
        unsigned long hx = 0;
        for (int i = dh; i >= 0; --i) hx = (hx * x + hm[i]) % ell;
        unsigned long fx = 0;
        for (int i = df; i >= 0; --i) fx = (fx * x + fm[i]) % ell;
        unsigned long w = (hx * hx + 4 * fx) % ell;
        total += 1 + chi[w];
    }
    if (curve.genus == 1) {
        total += 1;
    } else {
        const unsigned long h3 = hm[3], f6 = fm[6];
        total += 1 + chi[(h3 * h3 + 4 * f6) % ell];
    }
    return total;
}

/// #C(F_{ell^2}) for odd good ell: arithmetic in F_ell[t]/(t^2 - c) with c
/// the smallest quadratic non-residue, elements indexed a + ell*b.
long long count_f_ell2_odd(const CurveData& curve, unsigned long ell) {
    std::vector<int8_t> chi(ell, -1);
    chi[0] = 0;
    for (unsigned long t = 1; t <= ell / 2; ++t) chi[(t * t) % ell] = 1;
    unsigned long c = 2;
    while (c < ell && chi[c] != -1) ++c;
    if (c >= ell) throw std::logic_error("count_f_ell2_odd: no quadratic non-residue found");

    struct F2El { unsigned long a, b; };
    auto mul = [&](F2El u, F2El v) -> F2El {
        return {(u.a * v.a + c * (u.b * v.b % ell)) % ell, (u.a * v.b + u.b * v.a) % ell};
    };
    auto add_scalar = [&](F2El u, unsigned long s) -> F2El { return {(u.a + s) % ell, u.b}; };
    auto idx = [&](F2El u) { return u.a + ell * u.b; };

    std::vector<uint8_t> issq(ell * ell, 0);
    for (unsigned long a = 0; a < ell; ++a)
        for (unsigned long b = 0; b < ell; ++b) {
            F2El u{a, b};
            issq[idx(mul(u, u))] = 1;
        }
    auto chi2 = [&](F2El u) -> int { return (u.a == 0 && u.b == 0) ? 0 : (issq[idx(u)] ? 1 : -1); };

    const int dh = poly_degree(curve.h), df = poly_degree(curve.f);
    unsigned long hm[4] = {0, 0, 0, 0}, fm[7] = {0, 0, 0, 0, 0, 0, 0};
    for (int i = 0; i <= dh; ++i) hm[i] = mod_ul(coeff_at(curve.h, static_cast<size_t>(i)), ell);
    for (int i = 0; i <= df; ++i) fm[i] = mod_ul(coeff_at(curve.f, static_cast<size_t>(i)), ell);

    long long total = 0;
    for (unsigned long a = 0; a < ell; ++a)
        for (unsigned long b = 0; b < ell; ++b) {
            F2El x{a, b};
            F2El hx{0, 0};
            for (int i = dh; i >= 0; --i) hx = add_scalar(mul(hx, x), hm[i]);
            F2El fx{0, 0};
            for (int i = df; i >= 0; --i) fx = add_scalar(mul(fx, x), fm[i]);
            F2El w = mul(hx, hx);
            w.a = (w.a + 4 * fx.a) % ell;
            w.b = (w.b + 4 * fx.b) % ell;
            total += 1 + chi2(w);
        }
    if (curve.genus == 1) {
        total += 1;
    } else {
        F2El w{(hm[3] * hm[3] + 4 * fm[6]) % ell, 0};
        total += 1 + chi2(w);
    }
    return total;
}

/// #C(F_2) by exhaustion.
long long count_f2(const CurveData& curve) {
    auto hmod = [&](unsigned long x) {
        unsigned long s = 0;
        for (int i = poly_degree(curve.h); i >= 0; --i)
            s = (s * x + mod_ul(coeff_at(curve.h, static_cast<size_t>(i)), 2)) & 1UL;
        return s;
    };
    auto fmod = [&](unsigned long x) {
        unsigned long s = 0;
        for (int i = poly_degree(curve.f); i >= 0; --i)
            s = (s * x + mod_ul(coeff_at(curve.f, static_cast<size_t>(i)), 2)) & 1UL;
        return s;
    };
    long long total = 0;
    for (unsigned long x = 0; x <= 1; ++x)
        for (unsigned long y = 0; y <= 1; ++y)
            if (((y * y + hmod(x) * y) & 1UL) == fmod(x)) ++total;
    if (curve.genus == 1) {
        total += 1;
    } else {
        const unsigned long h3 = mod_ul(coeff_at(curve.h, 3), 2);
        const unsigned long f6 = mod_ul(coeff_at(curve.f, 6), 2);
        // h3 = 0 makes z -> z^2 a bijection, so the loop finds exactly the
        // one ramified point; no double-count correction is needed in char 2.
        for (unsigned long z = 0; z <= 1; ++z)
            if (((z * z + h3 * z) & 1UL) == f6) ++total;
    }
    return total;
}

/// #C(F_4) by exhaustion over F_2[t]/(t^2 + t + 1), elements 0..3 = a + 2b.
long long count_f4(const CurveData& curve) {
    auto mul4 = [](unsigned u, unsigned v) -> unsigned {
        unsigned a = u & 1, b = u >> 1, x = v & 1, y = v >> 1;
        unsigned re = (a & x) ^ (b & y);
        unsigned im = (a & y) ^ (b & x) ^ (b & y);
        return re | (im << 1);
    };
    auto add4 = [](unsigned u, unsigned v) -> unsigned { return u ^ v; };
    auto embed = [](unsigned long c) -> unsigned { return static_cast<unsigned>(c & 1UL); };

    const int dh = poly_degree(curve.h), df = poly_degree(curve.f);
    auto heval = [&](unsigned x) {
        unsigned s = 0;
        for (int i = dh; i >= 0; --i) s = add4(mul4(s, x), embed(mod_ul(coeff_at(curve.h, static_cast<size_t>(i)), 2)));
        return s;
    };
    auto feval = [&](unsigned x) {
        unsigned s = 0;
        for (int i = df; i >= 0; --i) s = add4(mul4(s, x), embed(mod_ul(coeff_at(curve.f, static_cast<size_t>(i)), 2)));
        return s;
    };
    long long total = 0;
    for (unsigned x = 0; x < 4; ++x) {
        unsigned hx = heval(x), fx = feval(x);
        for (unsigned y = 0; y < 4; ++y)
            if (add4(add4(mul4(y, y), mul4(hx, y)), fx) == 0) ++total;
    }
    if (curve.genus == 1) {
        total += 1;
    } else {
        const unsigned h3 = embed(mod_ul(coeff_at(curve.h, 3), 2));
        const unsigned f6 = embed(mod_ul(coeff_at(curve.f, 6), 2));
        unsigned count_inf = 0;
        for (unsigned z = 0; z < 4; ++z)
            if (add4(add4(mul4(z, z), mul4(h3, z)), f6) == 0) ++count_inf;
        total += count_inf;
    }
    return total;
}

}  // namespace

Real CurveData::period(mpfr_prec_t prec) const {
    if (real_period.empty()) throw std::invalid_argument("curve '" + label + "' has no stored real period");
    return Real(real_period, prec);
}

std::string CurveData::model_hash() const {
    std::ostringstream blob;
    blob << genus << "|";
    for (long c : h) blob << c << ",";
    blob << "|";
    for (long c : f) blob << c << ",";
    blob << "|" << conductor.get_str();
    const std::string s = blob.str();
    uint64_t hash = 1469598103934665603ULL;  // FNV-1a
    for (unsigned char ch : s) {
        hash ^= ch;
        hash *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex;
    for (int i = 15; i >= 0; --i) out << ((hash >> (4 * i)) & 0xF);
    return out.str();
}

std::string CurveData::equation_str() const {
    std::ostringstream out;
    out << "y^2";
    const std::string hs = poly_str(h, "x");
    if (hs != "0") {
        if (hs == "1") out << " + y";
        else if (hs == "x") out << " + x*y";
        else out << " + (" << hs << ")*y";
    }
    out << " = " << poly_str(f, "x");
    return out.str();
}

long long EulerFactor::at_one() const {
    long long s = 0;
    for (long long c : coeffs) s += c;
    return s;
}

Rational EulerFactor::at_inverse_ell() const {
    Rational sum = 0;
    Rational power = 1;
    const Rational inv_ell(1, static_cast<unsigned long>(ell));
    for (long long c : coeffs) {
        sum += Rational(static_cast<long>(c)) * power;
        power *= inv_ell;
    }
    sum.canonicalize();
    return sum;
}

std::string EulerFactor::str() const {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        long long c = coeffs[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        long long ac = c < 0 ? -c : c;
        if (ac != 1 || i == 0) out << ac;
        if (i >= 1) {
            out << "T";
            if (i >= 2) out << "^" << i;
        }
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

mpz_class model_discriminant(const CurveData& curve) {
    if (curve.genus == 1) {
        return b_invariants(curve).disc;
    }
    if (curve.genus != 2) throw std::invalid_argument("model_discriminant: genus must be 1 or 2");
    std::vector<mpz_class> g(7, mpz_class(0));
    for (size_t i = 0; i < 7; ++i) g[i] = mpz_class(4) * coeff_at(curve.f, i);
    for (size_t i = 0; i <= 3; ++i)
        for (size_t j = 0; j <= 3; ++j)
            g[i + j] += mpz_class(coeff_at(curve.h, i)) * coeff_at(curve.h, j);
    mpz_class d6 = binary_sextic_disc(g);
    mpz_class disc;
    if (!mpz_divisible_ui_p(d6.get_mpz_t(), 4096)) {
        throw std::invalid_argument("model_discriminant: disc_6(4f + h^2) of '" + curve.label +
                                    "' is not divisible by 2^12 (non-integral model)");
    }
    mpz_divexact_ui(disc.get_mpz_t(), d6.get_mpz_t(), 4096);
    return disc;
}

long long count_points(const CurveData& curve, unsigned long ell, int k) {
    if (k != 1 && k != 2) throw std::invalid_argument("count_points: k must be 1 or 2");
    if (curve.genus != 1 && curve.genus != 2) throw std::invalid_argument("count_points: genus must be 1 or 2");
    if (!curve.is_good(ell)) {
        throw std::domain_error("count_points: singular reduction of '" + curve.label + "' at ell = " +
                                std::to_string(ell) + " (ell divides the conductor)");
    }
    if (ell == 2) return k == 1 ? count_f2(curve) : count_f4(curve);
    return k == 1 ? count_f_ell_odd(curve, ell) : count_f_ell2_odd(curve, ell);
}

EulerFactor euler_factor(const CurveData& curve, unsigned long ell) {
    if (!curve.is_good(ell)) {
        auto it = curve.bad_euler.find(ell);
        if (it == curve.bad_euler.end()) {
            throw std::invalid_argument("euler_factor: no stored factor for '" + curve.label +
                                        "' at bad prime " + std::to_string(ell));
        }
        EulerFactor ef;
        ef.ell = ell;
        ef.coeffs.assign(it->second.begin(), it->second.end());
        if (ef.coeffs.empty() || ef.coeffs[0] != 1) {
            throw std::invalid_argument("euler_factor: stored factor at " + std::to_string(ell) +
                                        " for '" + curve.label + "' must start with constant term 1");
        }
        return ef;
    }
    const long long lell = static_cast<long long>(ell);
    const long long n1 = count_points(curve, ell, 1);
    const long long a1 = lell + 1 - n1;
    EulerFactor ef;
    ef.ell = ell;
    if (curve.genus == 1) {
        ef.coeffs = {1, -a1, lell};
    } else {
        const long long n2 = count_points(curve, ell, 2);
        const long long num = a1 * a1 - lell * lell - 1 + n2;
        if (num % 2 != 0) throw std::logic_error("euler_factor: parity failure in a2 at ell = " + std::to_string(ell));
        const long long a2 = num / 2;
        ef.coeffs = {1, -a1, a2, -lell * a1, lell * lell};
    }
    return ef;
}

DirichletSeries dirichlet_coeffs(const CurveData& curve, size_t M) {
    if (M < 1) throw std::invalid_argument("dirichlet_coeffs: M must be >= 1");
    DirichletSeries ds;
    ds.M = M;
    ds.a.assign(M + 1, 0);
    ds.a[1] = 1;
    if (M == 1) return ds;

    // Smallest-prime-factor sieve.
    std::vector<uint32_t> spf(M + 1, 0);
    for (size_t i = 2; i <= M; ++i) {
        if (spf[i] == 0) {
            for (size_t j = i; j <= M; j += i)
                if (spf[j] == 0) spf[j] = static_cast<uint32_t>(i);
        }
    }

    // Prime-power coefficients b[e] = a_{ell^e} from the Euler factor:
    // b[0] = 1, b[e] = -sum_{i=1..min(e,deg)} c_i b[e-i].
    std::vector<uint32_t> pindex(M + 1, 0);
    std::vector<std::vector<long long>> ppow;
    for (size_t ell = 2; ell <= M; ++ell) {
        if (spf[ell] != ell) continue;
        size_t emax = 1;
        {
            unsigned long long pw = ell;
            while (pw <= M / ell) { pw *= ell; ++emax; }
        }
        std::vector<long long> c;
        if (curve.is_good(static_cast<unsigned long>(ell)) && emax == 1) {
            // Only a_ell is needed: one point count over F_ell suffices.
            const long long n1 = count_points(curve, static_cast<unsigned long>(ell), 1);
            c = {1, -(static_cast<long long>(ell) + 1 - n1)};
        } else {
            c = euler_factor(curve, static_cast<unsigned long>(ell)).coeffs;
        }
        std::vector<long long> b(emax + 1, 0);
        b[0] = 1;
        for (size_t e = 1; e <= emax; ++e) {
            long long acc = 0;
            const size_t deg = c.size() - 1;
            for (size_t i = 1; i <= std::min(e, deg); ++i) acc += c[i] * b[e - i];
            b[e] = -acc;
        }
        pindex[ell] = static_cast<uint32_t>(ppow.size());
        ppow.push_back(std::move(b));
    }

    for (size_t n = 2; n <= M; ++n) {
        const size_t ell = spf[n];
        size_t m = n / ell, e = 1;
        while (m > 1 && spf[m] == ell) { m /= ell; ++e; }
        ds.a[n] = ppow[pindex[ell]][e] * ds.a[m];
    }
    return ds;
}

mpz_class torsion_gcd_bound(const CurveData& curve, const std::vector<unsigned long>& good_primes) {
    if (good_primes.empty()) throw std::invalid_argument("torsion_gcd_bound: need at least one prime");
    mpz_class g = 0;
    for (unsigned long ell : good_primes) {
        const long long n = euler_factor(curve, ell).at_one();
        mpz_class nz(static_cast<long>(n));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nz.get_mpz_t());
    }
    return g;
}

Real elliptic_real_period_agm(const CurveData& curve, mpfr_prec_t prec) {
    if (curve.genus != 1) throw std::invalid_argument("elliptic_real_period_agm: genus-1 models only");
    if (poly_degree(curve.f) != 3 || coeff_at(curve.f, 3) != 1)
        throw std::invalid_argument("elliptic_real_period_agm: model must have monic cubic f");
    const BInvariants b = b_invariants(curve);
    if (b.disc == 0) throw std::invalid_argument("elliptic_real_period_agm: singular model");

    const mpfr_prec_t W = prec + 32;
    const Real b2(static_cast<long>(b.b2), W), b4(static_cast<long>(b.b4), W), b6(static_cast<long>(b.b6), W);
    auto g = [&](const Real& x) { return ((Real(4L, W) * x + b2) * x + Real(2L, W) * b4) * x + b6; };
    auto gp = [&](const Real& x) { return (Real(12L, W) * x + Real(2L, W) * b2) * x + Real(2L, W) * b4; };

    // Largest real root by Newton from above (monotone beyond both the root
    // and the inflection point of the cubic).
    double bound = 1.0 + std::max({std::abs(static_cast<double>(b.b2)), std::abs(2.0 * static_cast<double>(b.b4)),
                                   std::abs(static_cast<double>(b.b6))}) / 4.0;
    Real x(Real(std::max(bound, -static_cast<double>(b.b2) / 12.0 + 1.0), W));
    for (int iter = 0; iter < 20000; ++iter) {
        Real step = g(x) / gp(x);
        x = x - step;
        if (step.is_zero() || step.exponent() < x.exponent() - static_cast<long>(W) + 4) break;
    }
    const Real e1 = x;

    // Deflate: 4x^3 + b2 x^2 + 2 b4 x + b6 = 4 (x - e1)(x^2 + beta x + gamma).
    const Real beta = b2 / Real(4L, W) + e1;
    const Real gamma = b4 / Real(2L, W) + beta * e1;
    const Real disc2 = beta * beta - Real(4L, W) * gamma;

    Real a0(0L, W), c0(0L, W);
    if (b.disc > 0) {
        const Real s = sqrt(disc2);
        const Real e2 = (s - beta) / Real(2L, W);
        const Real e3 = (Real(0L, W) - beta - s) / Real(2L, W);
        a0 = sqrt(e1 - e3);
        c0 = sqrt(e1 - e2);
    } else {
        const Real u = (Real(0L, W) - beta) / Real(2L, W);
        const Real v = sqrt(Real(0L, W) - disc2) / Real(2L, W);
        const Real w = e1 - u;
        const Real A = sqrt(w * w + v * v);
        a0 = Real(2L, W) * sqrt(A);
        c0 = sqrt(Real(2L, W) * A + Real(2L, W) * w);
    }

    Real a = a0, bb = c0;
    for (int iter = 0; iter < 20000; ++iter) {
        const Real am = (a + bb) / Real(2L, W);
        const Real gm = sqrt(a * bb);
        const Real diff = abs(a - bb);
        a = am;
        bb = gm;
        if (diff.is_zero() || diff.exponent() < a.exponent() - static_cast<long>(W) + 8) break;
    }
    // Omega^+ = integral of |dx / (2y + h)| over all of E(R) = 2*pi/AGM in
    // both cases: for disc > 0 the AGM gives the one-component value pi/AGM
    // and E(R) has two components of equal period; for disc < 0 the modified
    // arguments fold the complex root pair into a single 2*pi/AGM period.
    const Real omega = Real(2L, W) * Real::pi(W) / a;
    return omega.with_prec(prec);
}

}  // namespace thetalab
