#include "framix/quotients.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace framix {

namespace {

// --- dense polynomials in z over the rational-function field QFun ---

using ZP = std::vector<QFun>;

void trim(ZP& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

int degree(const ZP& p) { return static_cast<int>(p.size()) - 1; }

QFun eval(const ZP& p, const QFun& z) {
    QFun acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
    return acc;
}

ZP remainder(ZP a, const ZP& b) {
    trim(a);
    while (degree(a) >= degree(b)) {
        QFun f = a.back() / b.back();
        int shift = degree(a) - degree(b);
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

ZP poly_gcd(ZP a, ZP b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        ZP r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        QFun lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

// trace value of a d = 1 element as a polynomial in z
ZP trace_zpoly(const TraceValue& t) {
    ZP p;
    for (const auto& [e, c] : t.terms()) {
        if (e[1] != 0) throw std::logic_error("unexpected E in a d=1 algebra trace");
        if (static_cast<int>(p.size()) <= e[0]) p.resize(e[0] + 1);
        p[e[0]] += qfun(c);
    }
    trim(p);
    return p;
}

// the bracket 1 + q(a1 + a2) + q^2(a1 a2 + a2 a1) + q^3 a1 a2 a1 applied by
// right multiplication with generator indices 0 and 1
template <class E, class MulG>
E steinberg_bracket(const E& unit, MulG mul) {
    LaurentQ q1 = lq_q(1), q2 = lq_q(2), q3 = lq_q(3);
    E g1 = mul(unit, 0), g2 = mul(unit, 1);
    return unit + g1.scaled(q1) + g2.scaled(q1) + mul(g1, 1).scaled(q2) + mul(g2, 0).scaled(q2) +
           mul(mul(g1, 1), 0).scaled(q3);
}

const std::vector<std::vector<int>>& perm_words3() {
    static const std::vector<std::vector<int>> words = {{}, {0}, {1}, {0, 1}, {1, 0}, {0, 1, 0}};
    return words;
}

CFun cfun_rational(const Rational& r) { return CFun(CycLaurent(Cyclotomic(1, r))); }

}  // namespace

CFun eval_zpoly(const ZPolyC& p, const CFun& z0) {
    CFun acc;
    for (const auto& [e, c] : p.terms()) acc += CFun(c) * z0.pow(e);
    return acc;
}

YElement hecke_h12() {
    return steinberg_bracket(YElement::unit(1, 3), [](const YElement& x, int j) { return x.mult_g(j); });
}

YElement ftl_generator(int d) {
    YElement head = y_e(d, 3, 0) * y_e(d, 3, 1);
    return steinberg_bracket(head, [](const YElement& x, int j) { return x.mult_g(j); });
}

EElement ptl_generator() {
    EElement head = eeps(3, 0).mult_eps(1, 2);
    return steinberg_bracket(head, [](const EElement& x, int j) { return x.mult_b(j); });
}

std::vector<YElement> y3_basis(int d) {
    std::vector<YElement> out;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (const auto& word : perm_words3()) {
                    YElement m = YElement::unit(d, 3).mult_t(0, a).mult_t(1, b).mult_t(2, c);
                    for (int j : word) m = m.mult_g(j);
                    out.push_back(std::move(m));
                }
    return out;
}

std::vector<EElement> e3_basis() {
    SetPartition p3(3);
    std::vector<SetPartition> parts = {p3, p3.joined(0, 1), p3.joined(0, 2), p3.joined(1, 2),
                                       p3.joined(0, 1).joined(0, 2)};
    std::vector<EElement> out;
    for (const auto& part : parts)
        for (const auto& word : perm_words3()) {
            EElement m = EElement::from_monomial(3, TiedMonomial{part, Permutation(3)}, lq_one());
            for (int j : word) m = m.mult_b(j);
            out.push_back(std::move(m));
        }
    return out;
}

TLJonesResult tl_jones_z_check() {
    TLJonesResult res;
    YElement h12 = hecke_h12();
    ZP common;
    bool first = true;
    for (const auto& m : y3_basis(1)) {
        ZP p = trace_zpoly(y_trace(m * h12));
        common = first ? p : poly_gcd(common, p);
        first = false;
    }
    LaurentQ q2p1 = lq_q(2) + lq_one();
    QFun z_jones(LaurentQ::monomial(-1, Rational(-1)), q2p1);  // -q^{-1}/(q^2+1)
    QFun z_plain(LaurentQ::monomial(-1, Rational(-1)));        // -q^{-1}
    if (degree(common) == 2 && is_zero(eval(common, z_jones)) && is_zero(eval(common, z_plain)) &&
        z_jones != z_plain) {
        res.ok = true;
        res.roots = {z_jones, z_plain};
    }
    return res;
}

bool hecke_f_idempotent_check() {
    YElement F = YElement::unit(1, 3) + y_g(1, 3, 0).scaled(lq_q(1));
    return F * F == F.scaled(lq_q(2) + lq_one());
}

bool hecke_f_braid_trace_check() {
    YElement one = YElement::unit(1, 3);
    YElement F1 = one + y_g(1, 3, 0).scaled(lq_q(1));
    YElement F2 = one + y_g(1, 3, 1).scaled(lq_q(1));
    // (q^2+1)^3 (f1 f2 f1 - delta f1) = F1 F2 F1 - q^2 F1 with delta^{-1} = 2 + q^2 + q^{-2}
    YElement X = F1 * F2 * F1 - F1.scaled(lq_q(2));
    QFun z_jones(LaurentQ::monomial(-1, Rational(-1)), lq_q(2) + lq_one());
    for (const auto& m : y3_basis(1)) {
        ZP p = trace_zpoly(y_trace(m * X));
        if (!is_zero(eval(p, z_jones))) return false;
    }
    return true;
}

CFun ftl_z_value(int size) {
    CycLaurent num = CycLaurent::monomial(-1, Cyclotomic(-1));
    CycLaurent den = cyc_laurent((lq_q(2) + lq_one()).scaled(Rational(size)));
    return CFun(num, den);
}

CFun discarded_z_value(int size) {
    CycLaurent num = CycLaurent::monomial(-1, Cyclotomic(-1));
    return CFun(num, CycLaurent(Cyclotomic(size)));
}

bool ftl_annihilation_check(int d, const std::vector<int>& D, const CFun& z0) {
    YElement r12 = ftl_generator(d);
    for (const auto& m : y3_basis(d)) {
        ZPolyC zp = specialize_trace(y_trace(m * r12), D);
        if (!is_zero(eval_zpoly(zp, z0))) return false;
    }
    return true;
}

FTLParameterFamily ftl_family(int d, std::vector<int> sup1, std::vector<int> sup2) {
    std::sort(sup1.begin(), sup1.end());
    std::sort(sup2.begin(), sup2.end());
    std::set<int> seen;
    for (int m : sup1) {
        if (m < 0 || m >= d || !seen.insert(m).second) throw std::invalid_argument("bad support set");
    }
    for (int m : sup2) {
        if (m < 0 || m >= d || !seen.insert(m).second) throw std::invalid_argument("overlapping supports");
    }
    if (seen.empty()) throw std::invalid_argument("both supports empty");

    FTLParameterFamily fam;
    fam.d = d;
    fam.sup1 = std::move(sup1);
    fam.sup2 = std::move(sup2);
    // z = -1/(|Sup1| + (u+1)|Sup2|), u = q^2
    LaurentQ den = LaurentQ(Rational(static_cast<long>(fam.sup1.size() + fam.sup2.size())));
    den += lq_q(2).scaled(Rational(static_cast<long>(fam.sup2.size())));
    fam.z_u = CFun(CycLaurent(Cyclotomic(-1)), cyc_laurent(den));
    CFun up1 = cfun(lq_q(2) + lq_one(), d);  // u + 1
    for (int k = 1; k < d; ++k) {
        Cyclotomic s1 = Cyclotomic::zero(d), s2 = Cyclotomic::zero(d);
        for (int m : fam.sup1) s1 += Cyclotomic::zeta_pow(d, static_cast<long>(m) * k);
        for (int m : fam.sup2) s2 += Cyclotomic::zeta_pow(d, static_cast<long>(m) * k);
        CFun sum = CFun(CycLaurent(s1)) + up1 * CFun(CycLaurent(s2));
        fam.x.push_back(-fam.z_u * sum);
    }
    return fam;
}

bool ftl_family_residuals_vanish(const FTLParameterFamily& fam) {
    int d = fam.d;
    auto x_at = [&](int k) -> CFun {
        int m = ((k % d) + d) % d;
        return m == 0 ? CFun(CycLaurent(Cyclotomic(1))) : fam.x[m - 1];
    };
    CFun up1 = cfun(lq_q(2) + lq_one(), d);                // u + 1
    CFun up2 = cfun(lq_q(2) + lq_one() + lq_one(), d);     // u + 2
    auto lift = [&](const LaurentQ& p) { return cfun(p, d); };
    for (int m = 0; m < d; ++m) {
        CFun Em;  // E^{(m)} = (1/d) sum_s x_{m+s} x_{d-s}
        for (int s = 0; s < d; ++s) Em += x_at(m + s) * x_at(d - s);
        Em *= cfun_rational(Rational(1, d));
        TraceValue tv = y_trace(y_e_shift(d, 3, 0, m) * y_e(d, 3, 1));
        CFun Tm = tv.eval_at(CFun(), CFun(), fam.x, lift);
        CFun residual = up1 * fam.z_u * fam.z_u * x_at(m) + up2 * fam.z_u * Em + Tm;
        if (!is_zero(residual)) return false;
    }
    return true;
}

namespace {

YElement u_generator_power(int d, int m) {
    // gt_1 = g_1 + (q - 1) e_1 g_1 in two strands, raised to the m-th power
    YElement gt = y_g(d, 2, 0) + y_e(d, 2, 0).mult_g(0).scaled(lq_q(1) - lq_one());
    YElement acc = YElement::unit(d, 2);
    for (int i = 0; i < m; ++i) acc = acc * gt;
    return acc;
}

// (u^m - 1)/(u + 1) for even m, as a q-Laurent polynomial with u = q^2
LaurentQ even_power_quotient(int m) {
    LaurentQ p;
    for (int i = 0; i < m; ++i) p.add_term(2 * i, (m - 1 - i) % 2 == 0 ? Rational(1) : Rational(-1));
    return p;
}

}  // namespace

bool power_formula_check(int d, const std::vector<int>& D, int m) {
    int k = static_cast<int>(D.size());
    ZPolyC zp = specialize_trace(y_trace(u_generator_power(d, m)), D);
    // the q-side parameter corresponding to the u-side value z = -1/|D|
    CFun val = eval_zpoly(zp, discarded_z_value(k));
    // the closed form collapses at z = -1/|D|: 1 for even m, -1/|D| for odd m
    CFun expected = m % 2 == 0 ? CFun(CycLaurent(Cyclotomic(1))) : cfun_rational(Rational(-1, k));
    return val == expected;
}

bool power_formula_identity_even(int d, const std::vector<int>& D, int m) {
    if (m % 2 != 0) throw std::invalid_argument("identity form requires even m");
    int k = static_cast<int>(D.size());
    ZPolyC got = specialize_trace(y_trace(u_generator_power(d, m)), D);
    // ((u^m - 1)/(u + 1))(z + 1/|D|) + 1 with the u-side z equal to q times
    // the engine parameter
    LaurentQ P = even_power_quotient(m);
    ZPolyC want = ZPolyC::monomial(1, cyc_laurent(P * lq_q(1)));
    want += ZPolyC(cyc_laurent(P.scaled(Rational(1, k)) + lq_one()));
    return got == want;
}

PTLReport ptl_checks(int block_size) {
    PTLReport rep;
    EElement B = ptl_generator();
    int d = std::max(block_size, 1);
    rep.phi_image_matches = phi_map(B, d) == ftl_generator(d);
    QFun z0(LaurentQ::monomial(-1, Rational(-1)), (lq_q(2) + lq_one()).scaled(Rational(block_size)));
    QFun E0(LaurentQ(Rational(1, block_size)));
    auto lift = [](const LaurentQ& p) { return QFun(p); };
    rep.annihilation = true;
    for (const auto& m : e3_basis()) {
        TraceValue tv = e_trace(m * B);
        if (!is_zero(tv.eval_at(z0, E0, {}, lift))) {
            rep.annihilation = false;
            break;
        }
    }
    return rep;
}

}  // namespace framix
