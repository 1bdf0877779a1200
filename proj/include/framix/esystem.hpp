#pragma once

#include <string>
#include <vector>

#include "framix/cyclotomic.hpp"
#include "framix/rational.hpp"

namespace framix {

// Element of the group algebra of the cyclic group C_d over Q(zeta_d):
// coefficient vector (c_0, ..., c_{d-1}) representing sum c_k t^k.
struct GroupAlgebraElement {
    int d;
    std::vector<Cyclotomic> c;

    explicit GroupAlgebraElement(int d_) : d(d_), c(d_, Cyclotomic::zero(d_)) {}

    static GroupAlgebraElement delta(int d, int a);  // indicator of t^a
    static GroupAlgebraElement character(int d, int a);  // i_a: t^k -> zeta^{ak}

    const Cyclotomic& at(int k) const { return c[((k % d) + d) % d]; }
    bool operator==(const GroupAlgebraElement& o) const { return d == o.d && c == o.c; }
    std::string str() const;
};

GroupAlgebraElement convolve(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement pointwise(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement fourier(const GroupAlgebraElement& y);
GroupAlgebraElement scale(const GroupAlgebraElement& a, const Cyclotomic& k);

// A solution of the E-system, parametrized by a nonempty subset D of Z/dZ:
// x_s = (1/|D|) sum_{m in D} zeta^{ms}, E = 1/|D|.
struct ESystemSolution {
    int d;
    std::vector<int> D;             // sorted, in [0, d)
    std::vector<Cyclotomic> x;      // x_1 .. x_{d-1} (x_0 = 1 implicit)
    Rational E;

    std::string str() const;  // "D={...} x=(...) E=1/|D|"
};

ESystemSolution esystem_solution(int d, const std::vector<int>& D);

// true iff x (with x_0 = 1 prepended) satisfies the E-system
// sum_s x_{m+s} x_{d-s} = x_m sum_s x_s x_{d-s} for every m.
bool verify_esystem(int d, const std::vector<Cyclotomic>& x);

// All solutions, ordered by subset: full enumeration over nonempty D.
std::vector<ESystemSolution> all_esystem_solutions(int d);

// E^{(m)} = (1/d) sum_s x_{m+s} x_{d-s} for the solution's values.
Cyclotomic e_shift_value(const ESystemSolution& sol, int m);

}  // namespace framix
