#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <vector>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "framix/cyclotomic.hpp"
#include "framix/fraction.hpp"
#include "framix/laurent.hpp"

namespace framix {

// Variables of the invariant-assembly ring: q, s (with the convention
// lambda = s^2) and E. All exponents may be negative.
enum class PVar : int { q = 0, s = 1, E = 2 };

// Sparse Laurent polynomial in {q, s, E} over K.
template <class K>
class MPoly {
  public:
    using Exps = std::array<int, 3>;

    MPoly() = default;
    explicit MPoly(const K& c) {
        if (!is_zero(c)) t_[{0, 0, 0}] = c;
    }
    MPoly(int c) : MPoly(K(c)) {}

    static MPoly monomial(Exps e, const K& c) {
        MPoly p;
        if (!is_zero(c)) p.t_[e] = c;
        return p;
    }
    static MPoly var(PVar v, int exp = 1) {
        Exps e{0, 0, 0};
        e[static_cast<int>(v)] = exp;
        return monomial(e, K(1));
    }

    const std::map<Exps, K>& terms() const { return t_; }
    bool is_zero_poly() const { return t_.empty(); }

    void add_term(Exps e, const K& c) {
        if (is_zero(c)) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(e, c);
        } else {
            it->second += c;
            if (is_zero(it->second)) t_.erase(it);
        }
    }

    MPoly& operator+=(const MPoly& o) {
        for (const auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        for (const auto& [e, c] : o.t_) add_term(e, K(0) - c);
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_)
                r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        return r;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly operator-() const {
        MPoly r;
        for (const auto& [e, c] : t_) r.t_[e] = K(0) - c;
        return r;
    }

    MPoly pow(unsigned e) const {
        MPoly r{K(1)};
        for (unsigned i = 0; i < e; ++i) r *= *this;
        return r;
    }

    bool operator==(const MPoly& o) const { return t_ == o.t_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    // Monomial substitution s -> q^2 (i.e. lambda -> q^4).
    MPoly subst_s_q2() const {
        MPoly r;
        for (const auto& [e, c] : t_) r.add_term({e[0] + 2 * e[1], 0, e[2]}, c);
        return r;
    }

    // E -> numeric value (nonzero when negative E-exponents are present).
    MPoly subst_E(const K& value) const {
        MPoly r;
        for (const auto& [e, c] : t_) {
            K scale(1);
            if (e[2] >= 0) {
                for (int i = 0; i < e[2]; ++i) scale *= value;
            } else {
                if (is_zero(value)) throw std::domain_error("binding E = 0 hits a negative power of E");
                K inv = invert(value);
                for (int i = 0; i < -e[2]; ++i) scale *= inv;
            }
            r.add_term({e[0], e[1], 0}, c * scale);
        }
        return r;
    }

    std::string str() const;

  private:
    static K invert(const K& v);
    std::map<Exps, K> t_;
};

template <class K>
bool is_zero(const MPoly<K>& p) {
    return p.is_zero_poly();
}

template <>
inline Rational MPoly<Rational>::invert(const Rational& v) {
    return Rational(1) / v;
}
template <>
inline Cyclotomic MPoly<Cyclotomic>::invert(const Cyclotomic& v) {
    return v.inverse();
}

using QSEPoly = MPoly<Rational>;  // classical invariants live here
using CQSEPoly = MPoly<Cyclotomic>;  // framed invariants with cyclotomic trace values

template <class K>
using RatFun = Fraction<MPoly<K>>;

using RationalFunction = RatFun<Rational>;

inline RationalFunction rf_var(PVar v, int exp = 1) {
    return RationalFunction(QSEPoly::var(v, exp));
}

// Exact multivariate division: returns num/den when den divides num, nullopt
// otherwise. Works on Laurent input by clearing the monomial offsets first.
template <class K>
std::optional<MPoly<K>> divide_exact(const MPoly<K>& num, const MPoly<K>& den) {
    if (is_zero(den)) throw std::domain_error("exact division by zero polynomial");
    if (is_zero(num)) return MPoly<K>();
    using Exps = typename MPoly<K>::Exps;
    auto min_exps = [](const MPoly<K>& p) {
        Exps m{0, 0, 0};
        bool first = true;
        for (const auto& [e, c] : p.terms()) {
            (void)c;
            for (int i = 0; i < 3; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
            first = false;
        }
        return m;
    };
    Exps mn = min_exps(num), md = min_exps(den);
    auto shift = [](const MPoly<K>& p, Exps off) {
        MPoly<K> r;
        for (const auto& [e, c] : p.terms()) r.add_term({e[0] - off[0], e[1] - off[1], e[2] - off[2]}, c);
        return r;
    };
    MPoly<K> n = shift(num, mn), d = shift(den, md);
    // lex order on (E, s, q): the map's natural reverse order, take the last term
    MPoly<K> quot;
    auto lead = [](const MPoly<K>& p) { return *p.terms().rbegin(); };
    auto [dl_e, dl_c] = lead(d);
    const K dl_inv = [&] {
        if constexpr (std::is_same_v<K, Rational>)
            return Rational(1) / dl_c;
        else
            return dl_c.inverse();
    }();
    while (!is_zero(n)) {
        auto [nl_e, nl_c] = lead(n);
        Exps qe{nl_e[0] - dl_e[0], nl_e[1] - dl_e[1], nl_e[2] - dl_e[2]};
        if (qe[0] < 0 || qe[1] < 0 || qe[2] < 0) return std::nullopt;
        MPoly<K> t = MPoly<K>::monomial(qe, nl_c * dl_inv);
        quot += t;
        n -= t * d;
    }
    // restore the Laurent offset
    Exps off{mn[0] - md[0], mn[1] - md[1], mn[2] - md[2]};
    MPoly<K> result;
    for (const auto& [e, c] : quot.terms()) result.add_term({e[0] + off[0], e[1] + off[1], e[2] + off[2]}, c);
    return result;
}

// Clears a rational function to a Laurent polynomial; throws when the
// denominator does not divide (which signals a pipeline bug upstream).
template <class K>
MPoly<K> to_laurent(const RatFun<K>& r) {
    auto q = divide_exact(r.num(), r.den());
    if (!q) throw std::domain_error("rational function is not a Laurent polynomial; residual denominator: " + r.den().str());
    return *q;
}

template <class K>
std::string MPoly<K>::str() const {
    if (t_.empty()) return "0";
    static const char* names[3] = {"q", "s", "E"};
    // canonical term order: ascending s-exponent, then E, then q
    std::vector<std::pair<Exps, K>> sorted(t_.begin(), t_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return std::array<int, 3>{a.first[1], a.first[2], a.first[0]} <
               std::array<int, 3>{b.first[1], b.first[2], b.first[0]};
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : sorted) {
        bool neg = false;
        std::string cs = coeff_str(c, &neg);
        out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        bool any = false;
        std::ostringstream vars;
        for (int i = 0; i < 3; ++i) {
            if (e[i] == 0) continue;
            if (any) vars << "*";
            any = true;
            vars << names[i];
            if (e[i] != 1) vars << "^" << e[i];
        }
        if (!any) {
            out << cs;
        } else {
            if (cs != "1") out << cs << "*";
            out << vars.str();
        }
    }
    return out.str();
}

// Parse of the canonical polynomial text emitted by MPoly<Rational>::str.
QSEPoly parse_qse(const std::string& text);

// LaTeX rendering of the canonical form.
std::string latex_qse(const QSEPoly& p);

}  // namespace framix
