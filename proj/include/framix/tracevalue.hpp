#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "framix/cyclotomic.hpp"
#include "framix/laurent.hpp"
#include "framix/mpoly.hpp"

namespace framix {

// q-Laurent polynomials with cyclotomic coefficients, and polynomials in z
// over them (outer variable z, inner variable q).
using CycLaurent = Laurent<Cyclotomic>;
using ZPolyC = Laurent<CycLaurent>;

inline CycLaurent cyc_laurent(const LaurentQ& p, int order = 1) {
    CycLaurent r;
    for (const auto& [e, c] : p.terms()) r.add_term(e, Cyclotomic(order, c));
    return r;
}

// Polynomial in z and the trace parameters with LaurentQ coefficients.
// Exponent layout: [z, E, x1, ..., x_{d-1}]; all exponents nonnegative.
class TraceValue {
  public:
    using Exps = std::vector<int>;

    explicit TraceValue(int d = 1) : d_(d) {
        if (d < 1) throw std::domain_error("trace modulus must be positive");
    }

    int d() const { return d_; }
    int width() const { return 1 + d_; }  // z, E, x1..x_{d-1}
    const std::map<Exps, LaurentQ>& terms() const { return t_; }
    bool is_zero_val() const { return t_.empty(); }

    static TraceValue constant(int d, const LaurentQ& c) {
        TraceValue t(d);
        t.add_term(Exps(t.width(), 0), c);
        return t;
    }
    static TraceValue one(int d) { return constant(d, lq_one()); }
    // variable index: 0 = z, 1 = E, 1+s = x_s for 1 <= s <= d-1
    static TraceValue variable(int d, int index) {
        TraceValue t(d);
        Exps e(t.width(), 0);
        e.at(index) = 1;
        t.add_term(e, lq_one());
        return t;
    }
    static TraceValue z_var(int d) { return variable(d, 0); }
    static TraceValue e_var(int d) { return variable(d, 1); }
    static TraceValue x_var(int d, int s) {
        int m = ((s % d) + d) % d;
        if (m == 0) return one(d);
        return variable(d, 1 + m);
    }

    void add_term(Exps e, const LaurentQ& c) {
        if (static_cast<int>(e.size()) != width()) throw std::logic_error("trace exponent width mismatch");
        if (is_zero(c)) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(std::move(e), c);
        } else {
            it->second += c;
            if (is_zero(it->second)) t_.erase(it);
        }
    }

    TraceValue& operator+=(const TraceValue& o) {
        check(o);
        for (const auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    TraceValue& operator-=(const TraceValue& o) {
        check(o);
        for (const auto& [e, c] : o.t_) add_term(e, -c);
        return *this;
    }
    friend TraceValue operator+(TraceValue a, const TraceValue& b) { return a += b; }
    friend TraceValue operator-(TraceValue a, const TraceValue& b) { return a -= b; }
    friend TraceValue operator*(const TraceValue& a, const TraceValue& b) {
        a.check(b);
        TraceValue r(a.d_);
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                Exps e(ea);
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }
    TraceValue& operator*=(const TraceValue& o) { return *this = *this * o; }
    TraceValue scaled(const LaurentQ& k) const {
        TraceValue r(d_);
        for (const auto& [e, c] : t_) r.add_term(e, c * k);
        return r;
    }

    bool operator==(const TraceValue& o) const { return d_ == o.d_ && t_ == o.t_; }
    bool operator!=(const TraceValue& o) const { return !(*this == o); }

    // Bind x_s to cyclotomic solution values; z stays symbolic. E, when
    // present, is bound to e_value (the ties engine's symbol).
    ZPolyC specialize(const std::vector<Cyclotomic>& x, const Rational& e_value) const {
        if (static_cast<int>(x.size()) != d_ - 1) throw std::invalid_argument("need d-1 parameter values");
        ZPolyC out;
        for (const auto& [e, c] : t_) {
            int order = 1;
            for (const auto& v : x) order = std::max(order, v.order());
            Cyclotomic scale(order, pow_rat(e_value, e[1]));
            for (int s = 1; s < d_; ++s) scale *= x[s - 1].pow(e[1 + s]);
            CycLaurent coef = cyc_laurent(c, 1).scaled(scale);
            out += ZPolyC::monomial(e[0], coef);
        }
        return out;
    }

    // Full evaluation into the (q, s, E) rational-function field over K.
    // z_binding replaces z; E stays symbolic as the E variable when e_binding
    // is null, otherwise it is replaced too; x bindings are constants of K.
    template <class K>
    RatFun<K> evaluate(const RatFun<K>& z_binding, const RatFun<K>* e_binding,
                       const std::vector<K>& x) const {
        if (static_cast<int>(x.size()) != d_ - 1) throw std::invalid_argument("need d-1 parameter values");
        RatFun<K> out;
        const RatFun<K> e_var_rf(MPoly<K>::var(PVar::E));
        for (const auto& [e, c] : t_) {
            MPoly<K> coef;
            for (const auto& [qe, qc] : c.terms())
                coef += MPoly<K>::monomial({qe, 0, 0}, K(1)) * MPoly<K>(from_rational<K>(qc));
            RatFun<K> term(coef);
            term *= z_binding.pow(e[0]);
            term *= (e_binding ? *e_binding : e_var_rf).pow(e[1]);
            for (int s = 1; s < d_; ++s) {
                K v(1);
                for (int i = 0; i < e[1 + s]; ++i) v *= x[s - 1];
                term *= RatFun<K>(MPoly<K>(v));
            }
            out += term;
        }
        return out;
    }

    // Evaluation in an arbitrary commutative ring R given a coefficient lift.
    template <class R, class Lift>
    R eval_at(const R& z, const R& E, const std::vector<R>& x, Lift lift) const {
        if (static_cast<int>(x.size()) != d_ - 1) throw std::invalid_argument("need d-1 parameter values");
        R out = lift(LaurentQ());
        for (const auto& [e, c] : t_) {
            R term = lift(c);
            for (int i = 0; i < e[0]; ++i) term *= z;
            for (int i = 0; i < e[1]; ++i) term *= E;
            for (int s = 1; s < d_; ++s)
                for (int i = 0; i < e[1 + s]; ++i) term *= x[s - 1];
            out += term;
        }
        return out;
    }

    std::string str() const;

    template <class K>
    static K from_rational(const Rational& r);

  private:
    void check(const TraceValue& o) const {
        if (d_ != o.d_) throw std::invalid_argument("trace value modulus mismatch");
    }
    int d_;
    std::map<Exps, LaurentQ> t_;
};

template <>
inline Rational TraceValue::from_rational<Rational>(const Rational& r) {
    return r;
}
template <>
inline Cyclotomic TraceValue::from_rational<Cyclotomic>(const Rational& r) {
    return Cyclotomic(1, r);
}

inline bool is_zero(const TraceValue& t) { return t.is_zero_val(); }

std::string coeff_str(const LaurentQ& c, bool* negative);

inline std::string TraceValue::str() const {
    if (t_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : t_) {
        bool neg = false;
        std::string cs = coeff_str(c, &neg);
        out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        std::ostringstream vars;
        bool any = false;
        auto emit = [&](const std::string& name, int exp) {
            if (exp == 0) return;
            if (any) vars << "*";
            any = true;
            vars << name;
            if (exp != 1) vars << "^" << exp;
        };
        emit("z", e[0]);
        emit("E", e[1]);
        for (int s = 1; s < d_; ++s) emit("x" + std::to_string(s), e[1 + s]);
        if (!any) {
            out << cs;
        } else {
            if (cs != "1") out << cs << "*";
            out << vars.str();
        }
    }
    return out.str();
}

// Coefficient rendering for q-Laurent coefficients inside multivariate terms:
// plain rational style when the coefficient is a rational constant, otherwise
// the parenthesized polynomial.
inline std::string coeff_str(const LaurentQ& c, bool* negative) {
    if (c.terms().size() == 1 && c.terms().begin()->first == 0)
        return coeff_str(c.terms().begin()->second, negative);
    *negative = false;
    return "(" + c.str("q") + ")";
}

}  // namespace framix
