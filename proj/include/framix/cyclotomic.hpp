#pragma once

#include <string>
#include <vector>

#include "framix/rational.hpp"

namespace framix {

// Element of the cyclotomic field Q(zeta_d), stored as the canonical residue
// modulo the d-th cyclotomic polynomial Phi_d. For d = 1 the residue has
// degree 0 and the field is plainly Q.
class Cyclotomic {
  public:
    Cyclotomic() : order_(1), c_(1, Rational(0)) {}
    Cyclotomic(int order, Rational constant);
    Cyclotomic(int i) : Cyclotomic(1, Rational(i)) {}
    static Cyclotomic zero(int order) { return Cyclotomic(order, Rational(0)); }

    // zeta_d^k as an element of Q(zeta_d)
    static Cyclotomic zeta_pow(int order, long k);

    int order() const { return order_; }
    int degree() const { return static_cast<int>(c_.size()); }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero_elem() const;
    bool is_rational() const;
    // Valid only when is_rational()
    Rational rational_value() const { return c_[0]; }

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic operator-() const;

    Cyclotomic inverse() const;
    Cyclotomic pow(long e) const;

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
    bool operator<(const Cyclotomic& o) const;

    // Printed in the zeta-power basis, e.g. "1/2 - zeta + zeta^2".
    std::string str() const;

    // Coefficients of Phi_d, lowest degree first, monic.
    static const std::vector<Rational>& cyclotomic_polynomial(int d);

  private:
    int order_;
    std::vector<Rational> c_;  // size deg(Phi_order), residue mod Phi_order

    static void align(Cyclotomic& a, Cyclotomic& b);
};

inline bool is_zero(const Cyclotomic& c) { return c.is_zero_elem(); }

std::string coeff_str(const Cyclotomic& c, bool* negative);

}  // namespace framix
