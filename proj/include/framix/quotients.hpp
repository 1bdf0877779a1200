#pragma once

#include <vector>

#include "framix/esystem.hpp"
#include "framix/fraction.hpp"
#include "framix/ties.hpp"
#include "framix/tracevalue.hpp"
#include "framix/yokonuma.hpp"

namespace framix {

// Rational functions of q, plain and with cyclotomic coefficients.
using QFun = Fraction<LaurentQ>;
using CFun = Fraction<CycLaurent>;

inline QFun qfun(const LaurentQ& p) { return QFun(p); }
inline CFun cfun(const LaurentQ& p, int order = 1) { return CFun(cyc_laurent(p, order)); }

// Evaluate a z-polynomial with cyclotomic q-Laurent coefficients at z = z0.
CFun eval_zpoly(const ZPolyC& p, const CFun& z0);

// Steinberg-type ideal generators.
YElement hecke_h12();             // h_{1,2} in the d = 1 engine on 3 strands
YElement ftl_generator(int d);    // r_{1,2} = e1 e2 g_{1,2} on 3 strands
EElement ptl_generator();         // eps1 eps2 b_{1,2} on 3 strands

// Spanning monomials: t1^a t2^b t3^c w for the six permutation words (6 d^3
// elements), and the 30 tied monomials of the three-strand ties algebra.
std::vector<YElement> y3_basis(int d);
std::vector<EElement> e3_basis();

// Admissible trace parameters for the Temperley-Lieb quotient: the common
// roots in z of the six polynomials tau(m h_{1,2}); exactly
// { -q^{-1}/(q^2+1), -q^{-1} } when ok.
struct TLJonesResult {
    bool ok = false;
    std::vector<QFun> roots;
};
TLJonesResult tl_jones_z_check();

// (q h_1 + 1)^2 = (q^2+1)(q h_1 + 1), the denominator-free form of f_1^2 = f_1.
bool hecke_f_idempotent_check();
// tau(m (F1 F2 F1 - q^2 F1)) = 0 at z = -q^{-1}/(q^2+1) for all six basis
// monomials m, with F_i = q h_i + 1: trace certificate for f1 f2 f1 = delta f1
// in the quotient, delta^{-1} = 2 + q^2 + q^{-2}.
bool hecke_f_braid_trace_check();

// z values on the q-presentation side.
CFun ftl_z_value(int size);        // -q^{-1} / ((q^2+1) size)
CFun discarded_z_value(int size);  // -q^{-1} / size

// true iff specialize_trace(trace(m r_{1,2}), D) vanishes at z = z0 for all
// 6 d^3 spanning monomials m on 3 strands.
bool ftl_annihilation_check(int d, const std::vector<int>& D, const CFun& z0);

// Necessary-and-sufficient parameter family for passing the trace to the
// framed Temperley-Lieb quotient, in the u-presentation with u = q^2:
// z = -1/(|Sup1| + (u+1)|Sup2|), x_k = -z (sum_{m in Sup1} zeta^{mk}
// + (u+1) sum_{m in Sup2} zeta^{mk}).
struct FTLParameterFamily {
    int d;
    std::vector<int> sup1, sup2;
    std::vector<CFun> x;  // x_1 .. x_{d-1}
    CFun z_u;             // u-presentation trace parameter
};
FTLParameterFamily ftl_family(int d, std::vector<int> sup1, std::vector<int> sup2);

// Residuals (u+1) z^2 x_m + (u+2) z E^{(m)} + tr(e_1^{(m)} e_2), all m.
bool ftl_family_residuals_vanish(const FTLParameterFamily& fam);

// tr(gt_1^m) at the discarded value z = -1/|D| (u-presentation): equals the
// closed form ((u^m-1)/(u+1))(z + 1/|D|) + 1 for even m and the same with
// -1/|D| in place of +1 for odd m, i.e. the constants 1 and -1/|D|.
bool power_formula_check(int d, const std::vector<int>& D, int m);
// For even m the closed form holds identically in z, not only at -1/|D|.
bool power_formula_identity_even(int d, const std::vector<int>& D, int m);

// Partition Temperley-Lieb checks: the comparison map sends eps1 eps2 b_{1,2}
// to e1 e2 g_{1,2}, and the ties trace annihilates m * eps1 eps2 b_{1,2} at
// E = 1/k, z = -q^{-1}/((q^2+1) k) for every tied monomial m on 3 strands.
struct PTLReport {
    bool phi_image_matches = false;
    bool annihilation = false;
    bool ok() const { return phi_image_matches && annihilation; }
};
PTLReport ptl_checks(int block_size);

}  // namespace framix
