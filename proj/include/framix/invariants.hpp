#pragma once

#include <string>
#include <vector>

#include "framix/braid.hpp"
#include "framix/esystem.hpp"
#include "framix/mpoly.hpp"
#include "framix/ties.hpp"
#include "framix/yokonuma.hpp"

namespace framix {

// The invariants assembled from the Markov traces. Conventions: lambda = s^2
// throughout, so sqrt(lambda) is the honest variable s; z-form first, with
// the lambda substitution z = (q - q^{-1}) E / (1 - lambda) applied last.
enum class InvariantKind {
    homflypt,       // P(q, lambda): d = 1 trace, E = 1
    jones,          // V(q) = P(q, q^4)
    theta_d,        // Theta_d(q, lambda): E = 1/|D|
    theta_small_d,  // theta_d(q) = Theta_d(q, q^4)
    phi_dD,         // framed invariant from the specialized trace
    theta_general,  // Theta(q, lambda, E): ties engine, E symbolic
};

InvariantKind kind_from_name(const std::string& name);
std::string kind_name(InvariantKind kind);

struct InvariantSpec {
    InvariantKind kind = InvariantKind::homflypt;
    int d = 1;
    std::vector<int> D;  // empty means all of Z/dZ

    std::vector<int> effective_D() const {
        if (!D.empty()) return D;
        std::vector<int> full;
        for (int m = 0; m < d; ++m) full.push_back(m);
        return full;
    }
};

// Cancel the structural factors (1 - s^2) and (q - q^{-1}), strip the
// denominator's monomial content and normalize its leading coefficient to 1.
// The result is a canonical representative: a plain Laurent polynomial
// whenever the denominator clears.
template <class K>
RatFun<K> reduce_fraction(RatFun<K> f);

// Canonical text: the polynomial string, or "(num) / (den)" when a genuine
// denominator remains.
std::string rf_str(const RationalFunction& f);
std::string crf_str(const RatFun<Cyclotomic>& f);
std::string rf_latex(const RationalFunction& f);

// Classical invariants (all kinds except phi_dD). The braid must carry no
// framings. phi_dD inputs go through phi_invariant below.
RationalFunction invariant(const InvariantSpec& spec, const FramedBraidWord& b);

// Framed invariant Phi_{d,D} from the specialized Juyumaya trace.
RatFun<Cyclotomic> phi_invariant(int d, const std::vector<int>& D, const FramedBraidWord& b);

// z-form coincidence for knots: tr_{d,D}(alpha) = E_D^{n-1} tau(alpha) with
// tau taken at z/E_D, plus the assembled equality Theta_d = P. Throws when
// the closure is not a knot.
bool knot_coincidence_check(const BraidWord& b, int d, const std::vector<int>& D = {});

// Split unions of knots: tr_{d,D} = E_D^{n-k} tau(z/E_D) and the assembled
// Theta_d = E_D^{1-k} P, with k the closure component count.
bool disjoint_union_check(const BraidWord& b, int d, const std::vector<int>& D = {});

// The Hopf link separates Theta_d from P when E_D != 1: the knot-form
// identity fails, while tr_{d,D}(sigma_1^2) = 1 - E_D + E_D tau(sigma_1^2)
// with tau at z/E_D holds.
bool hopf_inequality_check(int d, const std::vector<int>& D = {});

// lambda_D = tr(g^{-1}) / tr(g) at the specialized parameters:
// tr_{d,D}(g^{-1}) = z - (q - q^{-1}) E_D.
bool lambda_rescaling_check(int d, const std::vector<int>& D = {});

enum class SkeinKind {
    homflypt,           // (1/s) P(L+) - s P(L-) = (q - q^{-1}) P(L0)
    theta_mixed,        // same shape for Theta_d, mixed crossings only
    theta_small_mixed,  // q^{-2} theta(L+) - q^2 theta(L-) = (q - q^{-1}) theta(L0)
    phi_framed,         // (1/s) Phi(L+) - s Phi(L-) = ((q-q^{-1})/d) sum_s Phi(L_s)
};

// Verify the skein identity for the crossing at `position` of b. The Theta
// and theta kinds require a mixed crossing there.
bool skein_check(SkeinKind kind, const FramedBraidWord& b, int position, int d = 1,
                 const std::vector<int>& D = {});

// Resolve mixed crossings by the Theta_d skein relation down to split unions
// of knots (lowest component forced over), evaluating each leaf as
// E_D^{1-k} P; must equal the trace pipeline.
RationalFunction skein_resolve_theta(const BraidWord& b, int d, long budget = 200000);

// Theta(q, lambda, E)(a) - Theta(q, lambda, E)(b), symbolic E.
RationalFunction theta_difference(const BraidWord& a, const BraidWord& b);

}  // namespace framix
