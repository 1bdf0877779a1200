#include "framix/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace framix {

namespace {

using Poly = std::vector<Rational>;  // dense, lowest degree first

void poly_trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

// Quotient and remainder of dense division; field coefficients so always exact.
void poly_divmod(Poly num, const Poly& den, Poly* quot, Poly* rem) {
    if (den.empty()) throw std::domain_error("polynomial division by zero");
    Poly q(num.size() > den.size() ? num.size() - den.size() + 1 : 1, Rational(0));
    const Rational lead = den.back();
    while (num.size() >= den.size() && !num.empty()) {
        Rational f = num.back() / lead;
        size_t shift = num.size() - den.size();
        q[shift] = f;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
        poly_trim(num);
        if (num.size() < den.size()) break;
    }
    poly_trim(q);
    if (quot) *quot = q;
    if (rem) *rem = num;
}

}  // namespace

const std::vector<Rational>& Cyclotomic::cyclotomic_polynomial(int d) {
    static std::map<int, Poly> cache;
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e
    Poly num(d + 1, Rational(0));
    num[0] = Rational(-1);
    num[d] = Rational(1);
    Poly den{Rational(1)};
    for (int e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        den = poly_mul(den, cyclotomic_polynomial(e));
    }
    Poly phi, rem;
    poly_divmod(num, den, &phi, &rem);
    if (!rem.empty()) throw std::logic_error("cyclotomic polynomial division not exact");
    return cache.emplace(d, std::move(phi)).first->second;
}

Cyclotomic::Cyclotomic(int order, Rational constant) : order_(order) {
    if (order < 1) throw std::domain_error("cyclotomic order must be positive");
    c_.assign(cyclotomic_polynomial(order).size() - 1, Rational(0));
    c_[0] = std::move(constant);
}

Cyclotomic Cyclotomic::zeta_pow(int order, long k) {
    k %= order;
    if (k < 0) k += order;
    Poly x(static_cast<size_t>(k) + 1, Rational(0));
    x.back() = Rational(1);
    Poly rem;
    poly_divmod(x, cyclotomic_polynomial(order), nullptr, &rem);
    Cyclotomic z = Cyclotomic::zero(order);
    for (size_t i = 0; i < rem.size(); ++i) z.c_[i] = rem[i];
    return z;
}

bool Cyclotomic::is_zero_elem() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

void Cyclotomic::align(Cyclotomic& a, Cyclotomic& b) {
    if (a.order_ == b.order_) return;
    // Only promotion of plain rationals is supported; mixed nontrivial orders
    // never arise in the pipelines.
    if (a.order_ == 1) {
        a = Cyclotomic(b.order_, a.c_[0]);
    } else if (b.order_ == 1) {
        b = Cyclotomic(a.order_, b.c_[0]);
    } else {
        throw std::domain_error("cyclotomic order mismatch");
    }
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    Cyclotomic rhs = o;
    align(*this, rhs);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    Cyclotomic rhs = o;
    align(*this, rhs);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
    return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic x = a, y = b;
    Cyclotomic::align(x, y);
    Poly prod = poly_mul(x.c_, y.c_);
    Poly rem;
    poly_divmod(prod, Cyclotomic::cyclotomic_polynomial(x.order_), nullptr, &rem);
    Cyclotomic r = Cyclotomic::zero(x.order_);
    for (size_t i = 0; i < rem.size(); ++i) r.c_[i] = rem[i];
    return r;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero_elem()) throw std::domain_error("cyclotomic division by zero");
    // Extended Euclid in Q[x] against Phi_order: a*c + b*Phi = gcd = const.
    Poly r0 = cyclotomic_polynomial(order_);
    Poly r1 = c_;
    poly_trim(r1);
    Poly s0{}, s1{Rational(1)};  // coefficients of the residue argument
    while (!r1.empty() && r1.size() > 1) {
        Poly q, rem;
        poly_divmod(r0, r1, &q, &rem);
        Poly s2 = s0;
        Poly qs = poly_mul(q, s1);
        if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        poly_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw std::logic_error("non-invertible cyclotomic residue");
    // r1 is a nonzero constant: inverse = s1 / r1[0]
    Cyclotomic inv = Cyclotomic::zero(order_);
    Rational scale = Rational(1) / r1[0];
    for (size_t i = 0; i < s1.size() && i < inv.c_.size(); ++i) inv.c_[i] = s1[i] * scale;
    if (s1.size() > inv.c_.size()) {
        Poly rem;
        poly_divmod(s1, cyclotomic_polynomial(order_), nullptr, &rem);
        for (auto& x : inv.c_) x = Rational(0);
        for (size_t i = 0; i < rem.size(); ++i) inv.c_[i] = rem[i] * scale;
    }
    return inv;
}

Cyclotomic Cyclotomic::pow(long e) const {
    Cyclotomic base = e < 0 ? inverse() : *this;
    long n = e < 0 ? -e : e;
    Cyclotomic acc(order_, Rational(1));
    for (long i = 0; i < n; ++i) acc *= base;
    return acc;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    Cyclotomic a = *this, b = o;
    align(a, b);
    return a.c_ == b.c_;
}

bool Cyclotomic::operator<(const Cyclotomic& o) const {
    if (order_ != o.order_) {
        Cyclotomic a = *this, b = o;
        align(a, b);
        return a.c_ < b.c_;
    }
    return c_ < o.c_;
}

std::string Cyclotomic::str() const {
    if (is_zero_elem()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Rational a = c_[i];
        bool neg = a < 0;
        if (neg) a = -a;
        out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        std::string cs = rat_str(a);
        if (i == 0) {
            out << cs;
        } else {
            if (cs != "1") out << cs << "*";
            out << "zeta";
            if (i != 1) out << "^" << i;
        }
    }
    return out.str();
}

std::string coeff_str(const Rational& c, bool* negative) {
    Rational a = c;
    *negative = a < 0;
    if (*negative) a = -a;
    return rat_str(a);
}

std::string coeff_str(const Cyclotomic& c, bool* negative) {
    if (c.is_rational()) return coeff_str(c.rational_value(), negative);
    *negative = false;
    return "(" + c.str() + ")";
}

}  // namespace framix
