#pragma once

// Order-p Dirichlet characters of prime conductor q = 1 (mod p), their
// identification with characters of the cyclic degree-p field cut out of
// Q(zeta_q), and (modified) Gauss sums.
//
// Conventions.  A setup fixes a generator g of (Z/q)^*.  The Galois group
// of the degree-p subfield F of Q(zeta_q) is generated by s, the
// restriction of zeta_q -> zeta_q^g, and the order-p characters are
//     psi_j(s) = zeta_p^j,   equivalently   psi_j(n) = zeta_p^{j*dlog_g(n)}
// as Dirichlet characters mod q.  Which generator a table of values is
// quoted against matters: published tables normalize psi by pinning the
// value at a stated generator, so the setup accepts an explicit one.

#include <cstdint>
#include <optional>
#include <vector>

#include "thetalab/cyclotomic.hpp"
#include "thetalab/mpreal.hpp"

namespace thetalab {

struct FieldSetup {
    unsigned p = 0;           ///< odd prime, the order of the characters
    unsigned q = 0;           ///< prime conductor, q = 1 (mod p)
    unsigned long gen = 0;    ///< generator of (Z/q)^* the characters are pinned to
    std::vector<int32_t> dlog;  ///< dlog[n] = a with gen^a = n (mod q); dlog[0] = -1
};

/// Build a setup for (p, q).  If `generator` is absent, a conventional
/// generator is chosen: a small fixed table covers the (p, q) pairs the
/// verification tables use, and the smallest primitive root mod q is the
/// fallback.  Throws unless p, q are primes with q = 1 (mod p) and the
/// generator (when given) is a primitive root mod q.
FieldSetup make_setup(unsigned p, unsigned q,
                      std::optional<unsigned long> generator = std::nullopt);

class DirichletCharacter {
public:
    /// Character psi_j of the setup; j = 0 is the trivial character.
    DirichletCharacter(const FieldSetup& setup, unsigned j);

    unsigned p() const { return p_; }
    unsigned q() const { return q_; }
    unsigned index() const { return j_; }
    bool is_trivial() const { return j_ == 0; }

    /// Exponent e with psi(n) = zeta_p^e, or std::nullopt when q | n.
    std::optional<unsigned> exponent(long n) const;

    /// psi(n) as an exact cyclotomic number (0 when q | n).
    CyclotomicElement value_exact(long n) const;

    /// psi(n) numerically, sending zeta_p to exp(2*pi*i/p).
    Complex value(long n, mpfr_prec_t prec) const;

    /// psi(s^a) for the distinguished Galois generator s: zeta_p^{j*a}.
    CyclotomicElement value_on_group(long a) const;

    /// The conjugate character psi_{-j}.
    DirichletCharacter conjugate() const;

    /// psi(-1) as +1/-1 (always +1 here: psi has odd order, so it is even).
    int parity() const;

private:
    unsigned p_, q_, j_;
    unsigned long gen_;
    std::vector<int32_t> dlog_;
};

/// All p characters of the setup, indexed by j = 0..p-1.
std::vector<DirichletCharacter> all_characters(const FieldSetup& setup);

/// Modified Gauss sum tau*(psi).  For nontrivial psi this is the plain
/// Gauss sum sum_{a=1}^{q-1} psi(a) exp(2*pi*i*a/q); for the trivial
/// character the modified value is exactly -1.
Complex gauss_sum(const DirichletCharacter& psi, mpfr_prec_t prec);

}  // namespace thetalab
