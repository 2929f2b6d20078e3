#include "thetalab/characters.hpp"

#include <stdexcept>

namespace thetalab {

namespace {

bool is_small_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

unsigned long powmod(unsigned long b, unsigned long e, unsigned long m) {
    unsigned long r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

bool is_primitive_root(unsigned long g, unsigned long q) {
    // q prime: g is a primitive root iff g^((q-1)/r) != 1 for every prime
    // divisor r of q-1.
    if (g % q == 0) return false;
    unsigned long m = q - 1;
    for (unsigned long r = 2; r * r <= m; ++r) {
        if (m % r == 0) {
            if (powmod(g, (q - 1) / r, q) == 1) return false;
            while (m % r == 0) m /= r;
        }
    }
    if (m > 1 && powmod(g, (q - 1) / m, q) == 1) return false;
    return true;
}

/// Conventional generators for the (p, q) pairs the verification tables
/// are quoted against.  The published tables fix psi by its value at these.
std::optional<unsigned long> conventional_generator(unsigned p, unsigned q) {
    struct Row { unsigned p, q; unsigned long g; };
    static constexpr Row table[] = {
        {3, 7, 3}, {3, 13, 2}, {3, 19, 2}, {3, 31, 3},
        {5, 11, 2}, {5, 31, 3}, {7, 29, 2},
    };
    for (const auto& r : table)
        if (r.p == p && r.q == q) return r.g;
    return std::nullopt;
}

}  // namespace

FieldSetup make_setup(unsigned p, unsigned q, std::optional<unsigned long> generator) {
    if (!is_small_prime(p) || p == 2)
        throw std::invalid_argument("make_setup: p must be an odd prime");
    if (!is_small_prime(q))
        throw std::invalid_argument("make_setup: q must be prime");
    if ((q - 1) % p != 0)
        throw std::invalid_argument("make_setup: q must be 1 mod p");

    unsigned long g;
    if (generator) {
        g = *generator % q;
        if (!is_primitive_root(g, q))
            throw std::invalid_argument("make_setup: given generator is not a primitive root mod q");
    } else if (auto conv = conventional_generator(p, q)) {
        g = *conv;
    } else {
        g = 2;
        while (!is_primitive_root(g, q)) ++g;
    }

    FieldSetup s;
    s.p = p;
    s.q = q;
    s.gen = g;
    s.dlog.assign(q, -1);
    unsigned long x = 1;
    for (unsigned long a = 0; a < q - 1; ++a) {
        s.dlog[x] = static_cast<int32_t>(a);
        x = (x * g) % q;
    }
    return s;
}

DirichletCharacter::DirichletCharacter(const FieldSetup& setup, unsigned j)
    : p_(setup.p), q_(setup.q), j_(j % setup.p), gen_(setup.gen), dlog_(setup.dlog) {
    if (setup.dlog.size() != setup.q)
        throw std::invalid_argument("DirichletCharacter: malformed setup");
}

std::optional<unsigned> DirichletCharacter::exponent(long n) const {
    long r = n % static_cast<long>(q_);
    if (r < 0) r += q_;
    if (r == 0) return std::nullopt;
    const auto a = static_cast<unsigned long>(dlog_[static_cast<size_t>(r)]);
    return static_cast<unsigned>((j_ * a) % p_);
}

CyclotomicElement DirichletCharacter::value_exact(long n) const {
    auto e = exponent(n);
    if (!e) return CyclotomicElement(p_);
    return CyclotomicElement(p_, Rational(1), static_cast<long>(*e));
}

Complex DirichletCharacter::value(long n, mpfr_prec_t prec) const {
    auto e = exponent(n);
    if (!e) return Complex(prec);
    const Real ang = Real::pi(prec) * 2L * static_cast<long>(*e) / static_cast<long>(p_);
    return Complex::cis(ang);
}

CyclotomicElement DirichletCharacter::value_on_group(long a) const {
    long e = (static_cast<long>(j_) * a) % static_cast<long>(p_);
    if (e < 0) e += p_;
    return CyclotomicElement(p_, Rational(1), e);
}

DirichletCharacter DirichletCharacter::conjugate() const {
    DirichletCharacter c = *this;
    c.j_ = (p_ - j_) % p_;
    return c;
}

int DirichletCharacter::parity() const {
    // -1 = gen^((q-1)/2), and p is odd, so j*(q-1)/2 mod p vanishes only if
    // p | (q-1)/2 ... in fact psi(-1) = zeta_p^{j(q-1)/2}; since psi(-1) is
    // +-1 and zeta_p has odd order, psi(-1) = 1 always.  Compute anyway.
    auto e = exponent(-1);
    return (e && *e != 0) ? -1 : 1;
}

std::vector<DirichletCharacter> all_characters(const FieldSetup& setup) {
    std::vector<DirichletCharacter> out;
    out.reserve(setup.p);
    for (unsigned j = 0; j < setup.p; ++j) out.emplace_back(setup, j);
    return out;
}

Complex gauss_sum(const DirichletCharacter& psi, mpfr_prec_t prec) {
    if (psi.is_trivial()) {
        // Modified Gauss sum of the trivial character: exactly -1.
        return Complex(-1L, prec);
    }
    const long q = psi.q();
    const Real two_pi_over_q = Real::pi(prec) * 2L / q;
    Complex acc(prec);
    for (long a = 1; a < q; ++a) {
        const Complex term = psi.value(a, prec) * Complex::cis(two_pi_over_q * a);
        acc += term;
    }
    return acc;
}

}  // namespace thetalab
