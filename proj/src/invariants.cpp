#include "framix/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace framix {

namespace {

template <class K>
MPoly<K> mp_const(const Rational& r) {
    return MPoly<K>(TraceValue::from_rational<K>(r));
}

template <class K>
MPoly<K> qdiff_poly() {
    MPoly<K> p = MPoly<K>::var(PVar::q);
    p -= MPoly<K>::var(PVar::q, -1);
    return p;
}

template <class K>
MPoly<K> one_minus_lambda() {
    MPoly<K> p{TraceValue::from_rational<K>(Rational(1))};
    p -= MPoly<K>::var(PVar::s, 2);
    return p;
}

template <class K>
K lead_coeff(const MPoly<K>& p) {
    return p.terms().rbegin()->second;
}

template <class K>
K coeff_inverse(const K& c);
template <>
Rational coeff_inverse<Rational>(const Rational& c) {
    return Rational(1) / c;
}
template <>
Cyclotomic coeff_inverse<Cyclotomic>(const Cyclotomic& c) {
    return c.inverse();
}

}  // namespace

template <class K>
RatFun<K> reduce_fraction(RatFun<K> f) {
    if (is_zero(f)) return RatFun<K>();
    MPoly<K> num = f.num(), den = f.den();
    for (const MPoly<K>& factor : {one_minus_lambda<K>(), qdiff_poly<K>()}) {
        while (true) {
            auto dq = divide_exact(den, factor);
            if (!dq) break;
            auto nq = divide_exact(num, factor);
            if (!nq) break;
            den = *dq;
            num = *nq;
        }
    }
    if (auto whole = divide_exact(num, den)) return RatFun<K>(*whole);
    // move the denominator's monomial content and leading unit to the numerator
    typename MPoly<K>::Exps shift{0, 0, 0};
    bool first = true;
    for (const auto& [e, c] : den.terms()) {
        (void)c;
        for (int i = 0; i < 3; ++i) shift[i] = first ? e[i] : std::min(shift[i], e[i]);
        first = false;
    }
    auto shifted = [&](const MPoly<K>& p) {
        MPoly<K> r;
        for (const auto& [e, c] : p.terms()) r.add_term({e[0] - shift[0], e[1] - shift[1], e[2] - shift[2]}, c);
        return r;
    };
    num = shifted(num);
    den = shifted(den);
    K inv = coeff_inverse(lead_coeff(den));
    num *= MPoly<K>(inv);
    den *= MPoly<K>(inv);
    return RatFun<K>(num, den);
}

template RatFun<Rational> reduce_fraction<Rational>(RatFun<Rational>);
template RatFun<Cyclotomic> reduce_fraction<Cyclotomic>(RatFun<Cyclotomic>);

namespace {

template <class K>
std::string rf_str_impl(const RatFun<K>& f) {
    RatFun<K> r = reduce_fraction(f);
    if (r.den() == MPoly<K>(TraceValue::from_rational<K>(Rational(1)))) return r.num().str();
    return "(" + r.num().str() + ") / (" + r.den().str() + ")";
}

}  // namespace

std::string rf_str(const RationalFunction& f) { return rf_str_impl(f); }
std::string crf_str(const RatFun<Cyclotomic>& f) { return rf_str_impl(f); }

std::string rf_latex(const RationalFunction& f) {
    RationalFunction r = reduce_fraction(f);
    if (r.den() == QSEPoly(1)) return latex_qse(r.num());
    return "\\frac{" + latex_qse(r.num()) + "}{" + latex_qse(r.den()) + "}";
}

InvariantKind kind_from_name(const std::string& name) {
    if (name == "homflypt") return InvariantKind::homflypt;
    if (name == "jones") return InvariantKind::jones;
    if (name == "theta") return InvariantKind::theta_d;
    if (name == "theta-small") return InvariantKind::theta_small_d;
    if (name == "phi") return InvariantKind::phi_dD;
    if (name == "theta-general") return InvariantKind::theta_general;
    throw std::invalid_argument("unknown invariant kind: " + name);
}

std::string kind_name(InvariantKind kind) {
    switch (kind) {
        case InvariantKind::homflypt: return "homflypt";
        case InvariantKind::jones: return "jones";
        case InvariantKind::theta_d: return "theta";
        case InvariantKind::theta_small_d: return "theta-small";
        case InvariantKind::phi_dD: return "phi";
        case InvariantKind::theta_general: return "theta-general";
    }
    throw std::logic_error("unreachable");
}

namespace {

RationalFunction subst_s(const RationalFunction& f) {
    return RationalFunction(f.num().subst_s_q2(), f.den().subst_s_q2());
}

// Core assembly over the ties engine: trace in (z, E), bind z, multiply the
// normalization ((1 - lambda)/(s (q - q^{-1}) E))^{n-1} (sqrt lambda)^eps.
RationalFunction classical_value(const BraidWord& w, const RationalFunction* e_binding) {
    TraceValue tv = e_trace(braid_to_eelement(w));
    RationalFunction e_val = e_binding ? *e_binding : rf_var(PVar::E);
    RationalFunction qd{qdiff_poly<Rational>()};
    RationalFunction oml{one_minus_lambda<Rational>()};
    RationalFunction z_binding = qd * e_val / oml;
    RationalFunction val =
        e_binding ? tv.evaluate<Rational>(z_binding, e_binding, {}) : tv.evaluate<Rational>(z_binding, nullptr, {});
    RationalFunction norm = (oml / (rf_var(PVar::s) * qd * e_val)).pow(w.n - 1);
    return reduce_fraction(val * norm * rf_var(PVar::s, w.exponent_sum()));
}

void require_classical(const FramedBraidWord& b) {
    for (int f : b.framings)
        if (f != 0) throw std::invalid_argument("classical invariants require an unframed braid");
}

}  // namespace

RationalFunction invariant(const InvariantSpec& spec, const FramedBraidWord& b) {
    require_classical(b);
    const BraidWord& w = b.word;
    switch (spec.kind) {
        case InvariantKind::homflypt: {
            RationalFunction one{QSEPoly(1)};
            return classical_value(w, &one);
        }
        case InvariantKind::jones: {
            RationalFunction one{QSEPoly(1)};
            return reduce_fraction(subst_s(classical_value(w, &one)));
        }
        case InvariantKind::theta_d: {
            RationalFunction e_val{QSEPoly(Rational(1, static_cast<long>(spec.effective_D().size())))};
            return classical_value(w, &e_val);
        }
        case InvariantKind::theta_small_d: {
            RationalFunction e_val{QSEPoly(Rational(1, static_cast<long>(spec.effective_D().size())))};
            return reduce_fraction(subst_s(classical_value(w, &e_val)));
        }
        case InvariantKind::theta_general:
            return classical_value(w, nullptr);
        case InvariantKind::phi_dD:
            throw std::invalid_argument("framed invariant: use phi_invariant");
    }
    throw std::logic_error("unreachable");
}

RatFun<Cyclotomic> phi_invariant(int d, const std::vector<int>& D, const FramedBraidWord& b) {
    if (b.d != d) throw std::invalid_argument("braid framing modulus does not match d");
    std::vector<int> DD = D.empty() ? InvariantSpec{InvariantKind::phi_dD, d, {}}.effective_D() : D;
    ESystemSolution sol = esystem_solution(d, DD);
    TraceValue tv = y_trace(braid_to_element(b));
    using CF = RatFun<Cyclotomic>;
    CF e_val{CQSEPoly(Cyclotomic(1, sol.E))};
    CF qd{qdiff_poly<Cyclotomic>()};
    CF oml{one_minus_lambda<Cyclotomic>()};
    CF z_binding = qd * e_val / oml;
    CF val = tv.evaluate<Cyclotomic>(z_binding, nullptr, sol.x);
    CF s_var{CQSEPoly::var(PVar::s)};
    CF norm = (oml / (s_var * qd * e_val)).pow(b.word.n - 1);
    CF eps{CQSEPoly::var(PVar::s, b.word.exponent_sum())};
    return reduce_fraction(val * norm * eps);
}

namespace {

// d = 1 Ocneanu trace of the word, as coefficients of powers of z.
std::vector<LaurentQ> tau_coeffs(const BraidWord& w) {
    FramedBraidWord fb;
    fb.word = w;
    fb.framings.assign(w.n, 0);
    fb.d = 1;
    TraceValue tv = y_trace(braid_to_element(fb));
    std::vector<LaurentQ> out;
    for (const auto& [e, c] : tv.terms()) {
        if (static_cast<int>(out.size()) <= e[0]) out.resize(e[0] + 1);
        out[e[0]] += c;
    }
    return out;
}

ZPolyC specialized_trace_of(const BraidWord& w, int d, const std::vector<int>& D) {
    FramedBraidWord fb;
    fb.word = w;
    fb.framings.assign(w.n, 0);
    fb.d = d;
    return specialize_trace(y_trace(braid_to_element(fb)), D);
}

std::vector<int> full_set(int d) {
    std::vector<int> D;
    for (int m = 0; m < d; ++m) D.push_back(m);
    return D;
}

// E^{n-k} tau(z/E): coefficient of z^j scaled by E^{n-k-j}.
ZPolyC scaled_tau(const BraidWord& w, const Rational& E, int k) {
    ZPolyC out;
    std::vector<LaurentQ> tau = tau_coeffs(w);
    for (int j = 0; j < static_cast<int>(tau.size()); ++j)
        out += ZPolyC::monomial(j, cyc_laurent(tau[j].scaled(pow_rat(E, w.n - k - j))));
    return out;
}

bool split_trace_identity(const BraidWord& w, int d, const std::vector<int>& D, int k) {
    return specialized_trace_of(w, d, D) == scaled_tau(w, Rational(1, static_cast<long>(D.size())), k);
}

bool assembled_split_identity(const BraidWord& w, int d, const std::vector<int>& D, int k) {
    FramedBraidWord fb;
    fb.word = w;
    fb.framings.assign(w.n, 0);
    fb.d = 1;
    InvariantSpec theta{InvariantKind::theta_d, d, D};
    InvariantSpec hom{InvariantKind::homflypt, 1, {}};
    Rational factor = pow_rat(Rational(static_cast<long>(D.size())), k - 1);  // E_D^{1-k}
    return invariant(theta, fb) == invariant(hom, fb) * RationalFunction(QSEPoly(factor));
}

}  // namespace

bool knot_coincidence_check(const BraidWord& b, int d, const std::vector<int>& D) {
    std::vector<int> DD = D.empty() ? full_set(d) : D;
    if (closure_components(b).count != 1) throw std::invalid_argument("closure is not a knot");
    return split_trace_identity(b, d, DD, 1) && assembled_split_identity(b, d, DD, 1);
}

bool disjoint_union_check(const BraidWord& b, int d, const std::vector<int>& D) {
    std::vector<int> DD = D.empty() ? full_set(d) : D;
    int k = closure_components(b).count;
    return split_trace_identity(b, d, DD, k) && assembled_split_identity(b, d, DD, k);
}

bool hopf_inequality_check(int d, const std::vector<int>& D) {
    std::vector<int> DD = D.empty() ? full_set(d) : D;
    BraidWord hopf;
    hopf.n = 2;
    hopf.letters = {1, 1};
    ZPolyC lhs = specialized_trace_of(hopf, d, DD);
    Rational E(1, static_cast<long>(DD.size()));
    ZPolyC knot_form = scaled_tau(hopf, E, 1);
    // 1 - E + E tau(z/E): the knot-form trace plus the constant 1 - E
    ZPolyC structural = knot_form + ZPolyC(CycLaurent(Cyclotomic(1, Rational(1) - E)));
    bool separated = DD.size() == 1 ? lhs == knot_form : lhs != knot_form;
    return separated && lhs == structural;
}

bool lambda_rescaling_check(int d, const std::vector<int>& D) {
    std::vector<int> DD = D.empty() ? full_set(d) : D;
    ZPolyC ginv = specialize_trace(y_trace(y_g_inv(d, 2, 0)), DD);
    Rational E(1, static_cast<long>(DD.size()));
    ZPolyC want = ZPolyC::monomial(1, CycLaurent(Cyclotomic(1)));
    want -= ZPolyC(cyc_laurent(lq_qdiff().scaled(E)));
    return ginv == want;
}

namespace {

// slot occupancy just before letter `position`
std::vector<int> strand_positions(const BraidWord& w, int position) {
    std::vector<int> pos(w.n);
    for (int i = 0; i < w.n; ++i) pos[i] = i;
    for (int p = 0; p < position; ++p) {
        int j = std::abs(w.letters[p]) - 1;
        std::swap(pos[j], pos[j + 1]);
    }
    return pos;
}

bool position_mixed(const BraidWord& w, int position) {
    auto mc = mixed_crossings(w);
    return std::find(mc.begin(), mc.end(), position) != mc.end();
}

FramedBraidWord with_letter(const FramedBraidWord& b, int position, int letter) {
    FramedBraidWord r = b;
    r.word.letters[position] = letter;
    return r;
}

FramedBraidWord without_letter(const FramedBraidWord& b, int position) {
    FramedBraidWord r = b;
    r.word.letters.erase(r.word.letters.begin() + position);
    return r;
}

}  // namespace

bool skein_check(SkeinKind kind, const FramedBraidWord& b, int position, int d,
                 const std::vector<int>& D) {
    if (position < 0 || position >= static_cast<int>(b.word.letters.size()))
        throw std::invalid_argument("skein position out of range");
    int letter = std::abs(b.word.letters[position]);
    FramedBraidWord plus = with_letter(b, position, letter);
    FramedBraidWord minus = with_letter(b, position, -letter);
    FramedBraidWord zero = without_letter(b, position);

    if (kind == SkeinKind::phi_framed) {
        int dd = b.d;
        RatFun<Cyclotomic> lhs = phi_invariant(dd, D, plus) * RatFun<Cyclotomic>(CQSEPoly::var(PVar::s, -1)) -
                                 phi_invariant(dd, D, minus) * RatFun<Cyclotomic>(CQSEPoly::var(PVar::s));
        RatFun<Cyclotomic> rhs;
        for (int s = 0; s < dd; ++s) {
            FramedBraidWord ls = zero;
            // insert t_i^s t_{i+1}^{-s} at the crossing site and collect to the top
            std::vector<int> pos = strand_positions(b.word, position);
            int j = letter - 1;
            ls.framings[pos[j]] = ((ls.framings[pos[j]] + s) % dd + dd) % dd;
            ls.framings[pos[j + 1]] = ((ls.framings[pos[j + 1]] - s) % dd + dd) % dd;
            rhs += phi_invariant(dd, D, ls);
        }
        rhs *= RatFun<Cyclotomic>(qdiff_poly<Cyclotomic>() * mp_const<Cyclotomic>(Rational(1, dd)));
        return lhs == rhs;
    }

    require_classical(b);
    if (kind != SkeinKind::homflypt && !position_mixed(plus.word, position))
        throw std::invalid_argument("skein position is not a mixed crossing");

    InvariantSpec spec;
    switch (kind) {
        case SkeinKind::homflypt: spec = {InvariantKind::homflypt, 1, {}}; break;
        case SkeinKind::theta_mixed: spec = {InvariantKind::theta_d, d, D}; break;
        case SkeinKind::theta_small_mixed: spec = {InvariantKind::theta_small_d, d, D}; break;
        case SkeinKind::phi_framed: break;  // handled above
    }
    // (1/sqrt(lambda)) I(L+) - sqrt(lambda) I(L-); at lambda = q^4, sqrt(lambda) = q^2
    RationalFunction lhs;
    if (kind == SkeinKind::theta_small_mixed) {
        lhs = invariant(spec, plus) * rf_var(PVar::q, -2) - invariant(spec, minus) * rf_var(PVar::q, 2);
    } else {
        lhs = invariant(spec, plus) * rf_var(PVar::s, -1) - invariant(spec, minus) * rf_var(PVar::s);
    }
    RationalFunction rhs = invariant(spec, zero) * RationalFunction(qdiff_poly<Rational>());
    return lhs == rhs;
}

namespace {

struct ResolutionAnalysis {
    int components = 0;
    std::vector<int> violating;
};

// A mixed crossing violates the component order when the over strand belongs
// to the larger component (positive letter: left strand over).
ResolutionAnalysis analyze(const BraidWord& w) {
    ResolutionAnalysis r;
    ClosureComponents cc = closure_components(w);
    r.components = cc.count;
    std::vector<int> pos(w.n);
    for (int i = 0; i < w.n; ++i) pos[i] = i;
    for (int p = 0; p < static_cast<int>(w.letters.size()); ++p) {
        int l = w.letters[p];
        int j = std::abs(l) - 1;
        int ca = cc.label[pos[j]], cb = cc.label[pos[j + 1]];
        if (ca != cb) {
            int over = l > 0 ? ca : cb;
            int under = l > 0 ? cb : ca;
            if (over > under) r.violating.push_back(p);
        }
        std::swap(pos[j], pos[j + 1]);
    }
    return r;
}

void resolve(const BraidWord& w, const QSEPoly& weight, int d, RationalFunction& acc, long& budget) {
    if (--budget < 0) throw std::runtime_error("skein resolution budget exceeded");
    ResolutionAnalysis info = analyze(w);
    if (info.violating.empty()) {
        FramedBraidWord fb;
        fb.word = w;
        fb.framings.assign(w.n, 0);
        fb.d = 1;
        RationalFunction p = invariant({InvariantKind::homflypt, 1, {}}, fb);
        // E_D^{1-k} with E_D = 1/d
        Rational factor = pow_rat(Rational(d), info.components - 1);
        acc += RationalFunction(weight * QSEPoly(factor)) * p;
        return;
    }
    int p0 = info.violating.front();
    int l = w.letters[p0];
    BraidWord switched = w;
    switched.letters[p0] = -l;
    BraidWord smoothed = w;
    smoothed.letters.erase(smoothed.letters.begin() + p0);
    QSEPoly qd = qdiff_poly<Rational>();
    if (l > 0) {
        // Theta(L+) = lambda Theta(L-) + sqrt(lambda) (q - q^{-1}) Theta(L0)
        resolve(switched, weight * QSEPoly::var(PVar::s, 2), d, acc, budget);
        resolve(smoothed, weight * QSEPoly::var(PVar::s) * qd, d, acc, budget);
    } else {
        // Theta(L-) = lambda^{-1} Theta(L+) - (1/sqrt(lambda)) (q - q^{-1}) Theta(L0)
        resolve(switched, weight * QSEPoly::var(PVar::s, -2), d, acc, budget);
        resolve(smoothed, -(weight * QSEPoly::var(PVar::s, -1) * qd), d, acc, budget);
    }
}

}  // namespace

RationalFunction skein_resolve_theta(const BraidWord& b, int d, long budget) {
    RationalFunction acc;
    resolve(b, QSEPoly(1), d, acc, budget);
    return reduce_fraction(acc);
}

RationalFunction theta_difference(const BraidWord& a, const BraidWord& b) {
    FramedBraidWord fa, fb;
    fa.word = a;
    fa.framings.assign(a.n, 0);
    fb.word = b;
    fb.framings.assign(b.n, 0);
    InvariantSpec spec{InvariantKind::theta_general, 1, {}};
    return reduce_fraction(invariant(spec, fa) - invariant(spec, fb));
}

}  // namespace framix
