#include "framix/esystem.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace framix {

GroupAlgebraElement GroupAlgebraElement::delta(int d, int a) {
    GroupAlgebraElement e(d);
    e.c[((a % d) + d) % d] = Cyclotomic(d, Rational(1));
    return e;
}

GroupAlgebraElement GroupAlgebraElement::character(int d, int a) {
    GroupAlgebraElement e(d);
    for (int k = 0; k < d; ++k) e.c[k] = Cyclotomic::zeta_pow(d, static_cast<long>(a) * k);
    return e;
}

std::string GroupAlgebraElement::str() const {
    std::ostringstream out;
    out << "(";
    for (int k = 0; k < d; ++k) out << (k ? ", " : "") << c[k].str();
    out << ")";
    return out.str();
}

GroupAlgebraElement convolve(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.d != b.d) throw std::invalid_argument("group algebra order mismatch");
    GroupAlgebraElement r(a.d);
    for (int t = 0; t < a.d; ++t)
        for (int s = 0; s < a.d; ++s) r.c[t] += a.c[s] * b.at(t - s);
    return r;
}

GroupAlgebraElement pointwise(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.d != b.d) throw std::invalid_argument("group algebra order mismatch");
    GroupAlgebraElement r(a.d);
    for (int k = 0; k < a.d; ++k) r.c[k] = a.c[k] * b.c[k];
    return r;
}

GroupAlgebraElement fourier(const GroupAlgebraElement& y) {
    // y-hat = sum_m (y * i_m)(0) t^m
    GroupAlgebraElement r(y.d);
    for (int m = 0; m < y.d; ++m) {
        Cyclotomic v = Cyclotomic::zero(y.d);
        for (int s = 0; s < y.d; ++s) v += y.c[s] * Cyclotomic::zeta_pow(y.d, static_cast<long>(m) * (-s));
        r.c[m] = v;
    }
    return r;
}

GroupAlgebraElement scale(const GroupAlgebraElement& a, const Cyclotomic& k) {
    GroupAlgebraElement r(a.d);
    for (int i = 0; i < a.d; ++i) r.c[i] = a.c[i] * k;
    return r;
}

ESystemSolution esystem_solution(int d, const std::vector<int>& D) {
    if (D.empty()) throw std::invalid_argument("the parametrizing subset must be nonempty");
    std::set<int> norm;
    for (int m : D) norm.insert(((m % d) + d) % d);
    ESystemSolution sol;
    sol.d = d;
    sol.D.assign(norm.begin(), norm.end());
    sol.E = Rational(1, static_cast<long>(sol.D.size()));
    Cyclotomic inv_size(d, sol.E);
    for (int s = 1; s < d; ++s) {
        Cyclotomic v = Cyclotomic::zero(d);
        for (int m : sol.D) v += Cyclotomic::zeta_pow(d, static_cast<long>(m) * s);
        sol.x.push_back(v * inv_size);
    }
    return sol;
}

namespace {
Cyclotomic x_at(int d, const std::vector<Cyclotomic>& x, int k) {
    k = ((k % d) + d) % d;
    if (k == 0) return Cyclotomic(d, Rational(1));
    return x[k - 1];
}
}  // namespace

bool verify_esystem(int d, const std::vector<Cyclotomic>& x) {
    if (static_cast<int>(x.size()) != d - 1) throw std::invalid_argument("need d-1 values");
    // E-condition: sum_s x_{m+s} x_{d-s} = x_m sum_s x_s x_{d-s}
    Cyclotomic e0 = Cyclotomic::zero(d);
    for (int s = 0; s < d; ++s) e0 += x_at(d, x, s) * x_at(d, x, d - s);
    for (int m = 1; m < d; ++m) {
        Cyclotomic em = Cyclotomic::zero(d);
        for (int s = 0; s < d; ++s) em += x_at(d, x, m + s) * x_at(d, x, d - s);
        if (em != x_at(d, x, m) * e0) return false;
    }
    return true;
}

std::vector<ESystemSolution> all_esystem_solutions(int d) {
    std::vector<ESystemSolution> out;
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
        std::vector<int> D;
        for (int m = 0; m < d; ++m)
            if (mask & (1u << m)) D.push_back(m);
        out.push_back(esystem_solution(d, D));
    }
    return out;
}

Cyclotomic e_shift_value(const ESystemSolution& sol, int m) {
    Cyclotomic v = Cyclotomic::zero(sol.d);
    for (int s = 0; s < sol.d; ++s) v += x_at(sol.d, sol.x, m + s) * x_at(sol.d, sol.x, sol.d - s);
    return v * Cyclotomic(sol.d, Rational(1, sol.d));
}

std::string ESystemSolution::str() const {
    std::ostringstream out;
    out << "D={";
    for (size_t i = 0; i < D.size(); ++i) out << (i ? "," : "") << D[i];
    out << "} x=(";
    for (size_t i = 0; i < x.size(); ++i) out << (i ? ", " : "") << x[i].str();
    out << ") E=" << rat_str(E);
    return out.str();
}

}  // namespace framix
