#include "thetalab/group_algebra.hpp"

#include <cassert>
#include <stdexcept>

namespace thetalab {

namespace {

bool is_small_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

size_t mod_index(long j, unsigned p) {
    long r = j % static_cast<long>(p);
    if (r < 0) r += p;
    return static_cast<size_t>(r);
}

}  // namespace

GroupAlgebraElement::GroupAlgebraElement(unsigned p) : p_(p), c_(p, Rational(0)) {
    if (!is_small_prime(p)) throw std::invalid_argument("GroupAlgebraElement: group order must be prime");
}

GroupAlgebraElement::GroupAlgebraElement(unsigned p, std::vector<Rational> coeffs)
    : GroupAlgebraElement(p) {
    if (coeffs.size() != p)
        throw std::invalid_argument("GroupAlgebraElement: expected p coefficients");
    // mpq arithmetic assumes canonical form; enforce it at this boundary so
    // hand-built mpq_class(n, d) inputs cannot poison later comparisons.
    for (auto& ci : coeffs) ci.canonicalize();
    c_ = std::move(coeffs);
}

const Rational& GroupAlgebraElement::coeff(long j) const { return c_[mod_index(j, p_)]; }

void GroupAlgebraElement::set_coeff(long j, const Rational& v) {
    Rational vv(v);
    vv.canonicalize();
    c_[mod_index(j, p_)] = std::move(vv);
}

GroupAlgebraElement GroupAlgebraElement::operator-() const {
    GroupAlgebraElement r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("GroupAlgebraElement: mixed group orders");
    GroupAlgebraElement r(a.p_);
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("GroupAlgebraElement: mixed group orders");
    GroupAlgebraElement r(a.p_);
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("GroupAlgebraElement: mixed group orders");
    GroupAlgebraElement r(a.p_);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[(i + j) % a.p_] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const Rational& s) {
    GroupAlgebraElement r(a.p_);
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] * s;
    return r;
}

bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
}

bool GroupAlgebraElement::is_p_integral() const {
    for (const auto& ci : c_)
        if (vp_rational(ci, p_) < 0) return false;
    return true;
}

long GroupAlgebraElement::min_vp() const {
    long m = kValInfinity;
    for (const auto& ci : c_) {
        long v = vp_rational(ci, p_);
        if (v < m) m = v;
    }
    return m;
}

std::string GroupAlgebraElement::str() const {
    bool all_zero = true;
    for (const auto& ci : c_)
        if (ci != 0) { all_zero = false; break; }
    if (all_zero) return "0";

    mpz_class g(0), l(1);
    for (const auto& ci : c_) {
        if (ci == 0) continue;
        mpz_class num = abs(ci.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ci.get_den().get_mpz_t());
    }
    Rational content(g, l);
    content.canonicalize();
    for (const auto& ci : c_) {
        if (ci != 0) {
            if (ci < 0) content = -content;
            break;
        }
    }

    std::string inner;
    int terms = 0;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational t = c_[i] / content;
        assert(t.get_den() == 1);
        mpz_class a = t.get_num();
        std::string coeff = mpz_class(abs(a)).get_str();
        std::string mono = (i == 0) ? "" : (i == 1 ? "s" : "s^" + std::to_string(i));
        std::string body;
        if (mono.empty()) body = coeff;
        else if (coeff == "1") body = mono;
        else body = coeff + "*" + mono;
        if (terms == 0) inner = (a < 0 ? "-" : "") + body;
        else inner += (a < 0 ? "-" : "+") + body;
        ++terms;
    }

    if (content == 1) return inner;
    if (content == -1) return terms > 1 ? "-(" + inner + ")" : "-" + inner;
    std::string cs = rational_str(content);
    std::string prefix = (content.get_den() != 1) ? "(" + cs + ")" : cs;
    return terms > 1 ? prefix + "*(" + inner + ")" : prefix + "*" + inner;
}

}  // namespace thetalab
