#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "framix/rational.hpp"

namespace framix {

// Sparse univariate Laurent polynomial over K. Zero coefficients are never
// stored, so structural equality is canonical equality.
template <class K>
class Laurent {
  public:
    Laurent() = default;
    explicit Laurent(const K& c) {
        if (!is_zero(c)) terms_[0] = c;
    }
    static Laurent monomial(int exp, const K& c) {
        Laurent p;
        if (!is_zero(c)) p.terms_[exp] = c;
        return p;
    }

    bool is_zero_poly() const { return terms_.empty(); }
    const std::map<int, K>& terms() const { return terms_; }

    void add_term(int exp, const K& c) {
        if (is_zero(c)) return;
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            terms_.emplace(exp, c);
        } else {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, K(0) - c);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    Laurent operator-() const {
        Laurent r;
        for (const auto& [e, c] : terms_) r.terms_[e] = K(0) - c;
        return r;
    }

    Laurent scaled(const K& k) const {
        Laurent r;
        if (is_zero(k)) return r;
        for (const auto& [e, c] : terms_) {
            K v = c * k;
            if (!is_zero(v)) r.terms_[e] = v;
        }
        return r;
    }

    Laurent pow(unsigned e) const {
        Laurent r{K(1)};
        for (unsigned i = 0; i < e; ++i) r *= *this;
        return r;
    }

    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }
    bool operator<(const Laurent& o) const { return terms_ < o.terms_; }

    int min_exp() const {
        if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
        return terms_.begin()->first;
    }
    int max_exp() const {
        if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
        return terms_.rbegin()->first;
    }

    std::string str(const std::string& var) const;

  private:
    std::map<int, K> terms_;
};

template <class K>
bool is_zero(const Laurent<K>& p) {
    return p.is_zero_poly();
}

// Laurent polynomials in q over the rationals: the coefficient ring of both
// algebra engines.
using LaurentQ = Laurent<Rational>;

inline LaurentQ lq_one() { return LaurentQ(Rational(1)); }
inline LaurentQ lq_q(int exp = 1) { return LaurentQ::monomial(exp, Rational(1)); }
// q - q^-1, the ubiquitous quadratic coefficient.
inline LaurentQ lq_qdiff() {
    LaurentQ p = lq_q(1);
    p.add_term(-1, Rational(-1));
    return p;
}

std::string coeff_str(const Rational& c, bool* negative);

template <class K>
std::string Laurent<K>::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool neg = false;
        std::string cs = coeff_str(c, &neg);
        out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        if (e == 0) {
            out << cs;
        } else {
            if (cs != "1") out << cs << "*";
            out << var;
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

}  // namespace framix
