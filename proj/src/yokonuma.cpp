#include "framix/yokonuma.hpp"

#include <sstream>
#include <stdexcept>

#include "framix/esystem.hpp"

namespace framix {

YElement::YElement(int d, int n) : d_(d), n_(n) {
    if (d < 1 || n < 1) throw std::invalid_argument("bad algebra parameters");
}

YElement YElement::unit(int d, int n) {
    return from_monomial(d, n, YMonomial{std::vector<int>(n, 0), Permutation(n)}, lq_one());
}

YElement YElement::from_monomial(int d, int n, YMonomial m, const LaurentQ& c) {
    YElement e(d, n);
    e.add_term(std::move(m), c);
    return e;
}

void YElement::add_term(YMonomial m, const LaurentQ& c) {
    if (is_zero(c)) return;
    if (static_cast<int>(m.fr.size()) != n_ || m.w.n() != n_) throw std::logic_error("monomial size mismatch");
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (is_zero(it->second)) t_.erase(it);
    }
}

void YElement::check(const YElement& o) const {
    if (d_ != o.d_ || n_ != o.n_) throw std::invalid_argument("algebra parameter mismatch");
}

YElement& YElement::operator+=(const YElement& o) {
    check(o);
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

YElement& YElement::operator-=(const YElement& o) {
    check(o);
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

YElement YElement::scaled(const LaurentQ& k) const {
    YElement r(d_, n_);
    if (is_zero(k)) return r;
    for (const auto& [m, c] : t_) r.add_term(m, c * k);
    return r;
}

YElement YElement::mult_g(int j) const {
    if (j < 0 || j + 1 >= n_) throw std::out_of_range("generator index out of range");
    YElement r(d_, n_);
    const LaurentQ qd = lq_qdiff();
    const Rational inv_d = Rational(1, d_);
    for (const auto& [m, c] : t_) {
        YMonomial up = m;
        up.w.right_swap(j);
        if (m.w.length_up(j)) {
            r.add_term(std::move(up), c);
        } else {
            // w = v s_j with l(v) < l(w): g_w g_j = g_v + (q - q^-1) e_{v(j), v(j+1)} g_w
            int p = up.w(j), s2 = up.w(j + 1);
            r.add_term(up, c);
            LaurentQ corr = (c * qd).scaled(inv_d);
            for (int s = 0; s < d_; ++s) {
                YMonomial mm = m;
                mm.fr[p] = (mm.fr[p] + s) % d_;
                mm.fr[s2] = (mm.fr[s2] + d_ - s) % d_;
                r.add_term(std::move(mm), corr);
            }
        }
    }
    return r;
}

YElement YElement::mult_e_pair(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j) throw std::out_of_range("idempotent indices out of range");
    YElement r(d_, n_);
    const Rational inv_d = Rational(1, d_);
    for (const auto& [m, c] : t_) {
        int p = m.w(i), s2 = m.w(j);
        LaurentQ cc = c.scaled(inv_d);
        for (int s = 0; s < d_; ++s) {
            YMonomial mm = m;
            mm.fr[p] = (mm.fr[p] + s) % d_;
            mm.fr[s2] = (mm.fr[s2] + d_ - s) % d_;
            r.add_term(std::move(mm), cc);
        }
    }
    return r;
}

YElement YElement::mult_g_inv(int j) const {
    // g_j^{-1} = g_j - (q - q^{-1}) e_j
    YElement r = mult_g(j);
    r -= mult_e_pair(j, j + 1).scaled(lq_qdiff());
    return r;
}

YElement YElement::mult_t(int j, int m) const {
    if (j < 0 || j >= n_) throw std::out_of_range("strand index out of range");
    int mm = ((m % d_) + d_) % d_;
    YElement r(d_, n_);
    for (const auto& [mo, c] : t_) {
        YMonomial out = mo;
        out.fr[mo.w(j)] = (out.fr[mo.w(j)] + mm) % d_;
        r.add_term(std::move(out), c);
    }
    return r;
}

YElement operator*(const YElement& x, const YElement& y) {
    x.check(y);
    YElement r(x.d(), x.n());
    for (const auto& [m, c] : y.terms()) {
        YElement acc = x.scaled(c);
        for (int j = 0; j < x.n(); ++j)
            if (m.fr[j] != 0) acc = acc.mult_t(j, m.fr[j]);
        for (int letter : m.w.reduced_word()) acc = acc.mult_g(letter);
        r += acc;
    }
    return r;
}

bool YElement::operator==(const YElement& o) const { return d_ == o.d_ && n_ == o.n_ && t_ == o.t_; }

std::string YElement::str() const {
    if (t_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : t_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str("q") << ")";
        for (int i = 0; i < n_; ++i)
            if (m.fr[i] != 0) out << "*t" << (i + 1) << "^" << m.fr[i];
        auto word = m.w.reduced_word();
        for (int l : word) out << "*g" << (l + 1);
    }
    return out.str();
}

YElement y_g(int d, int n, int i) { return YElement::unit(d, n).mult_g(i); }
YElement y_g_inv(int d, int n, int i) { return YElement::unit(d, n).mult_g_inv(i); }
YElement y_t(int d, int n, int i) { return YElement::unit(d, n).mult_t(i, 1); }
YElement y_e_pair(int d, int n, int i, int j) { return YElement::unit(d, n).mult_e_pair(i, j); }
YElement y_e(int d, int n, int i) { return y_e_pair(d, n, i, i + 1); }
YElement y_e_shift(int d, int n, int i, int m) { return y_e(d, n, i).mult_t(i, m); }

YElement braid_to_element(const FramedBraidWord& b, int d, int n) {
    if (b.d != d) throw std::invalid_argument("framing modulus mismatch");
    if (b.word.n > n) throw std::invalid_argument("braid needs more strands than the algebra has");
    YMonomial m{std::vector<int>(n, 0), Permutation(n)};
    for (int i = 0; i < b.word.n; ++i) m.fr[i] = ((b.framings[i] % d) + d) % d;
    YElement x = YElement::from_monomial(d, n, std::move(m), lq_one());
    for (int l : b.word.letters) x = l > 0 ? x.mult_g(l - 1) : x.mult_g_inv(-l - 1);
    return x;
}

YElement braid_to_element(const FramedBraidWord& b) { return braid_to_element(b, b.d, b.word.n); }

namespace {

TraceValue trace_monomial(int d, const YMonomial& m) {
    const int n = m.w.n();
    const int T = n - 1;
    if (m.w(T) == T) {
        TraceValue f = TraceValue::x_var(d, m.fr[T]);
        if (n == 1) return f;
        YMonomial sub{std::vector<int>(m.fr.begin(), m.fr.end() - 1), m.w.restricted(T)};
        return f * trace_monomial(d, sub);
    }
    const int i = m.w.inverse()(T);
    // w = w' * (s_{T-1} ... s_i) with w' fixing T; peel the top generator:
    // tr(t^a g_w) = z tr(t^{a'} g_{w'} g_{T-2} ... g_i) with the top framing
    // transported to slot w'(T-1).
    Permutation c(n);
    for (int j = T - 1; j >= i; --j) c.right_swap(j);
    Permutation wp = m.w * c.inverse();
    std::vector<int> fr(m.fr.begin(), m.fr.end() - 1);
    int slot = wp(T - 1);
    fr[slot] = (fr[slot] + m.fr[T]) % d;
    YElement x = YElement::from_monomial(d, T, YMonomial{std::move(fr), wp.restricted(T)}, lq_one());
    for (int j = T - 2; j >= i; --j) x = x.mult_g(j);
    return TraceValue::z_var(d) * y_trace(x);
}

}  // namespace

TraceValue y_trace(const YElement& x) {
    TraceValue out(x.d());
    for (const auto& [m, c] : x.terms()) out += trace_monomial(x.d(), m).scaled(c);
    return out;
}

ZPolyC specialize_trace(const TraceValue& t, const std::vector<int>& D) {
    ESystemSolution sol = esystem_solution(t.d(), D);
    return t.specialize(sol.x, sol.E);
}

}  // namespace framix
