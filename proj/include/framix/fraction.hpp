#pragma once

#include <stdexcept>

namespace framix {

// Fraction over a commutative domain R. No gcd reduction is attempted;
// equality is decided by cross-multiplication, which is canonical for the
// uses here (zero tests and identity checks).
template <class R>
class Fraction {
  public:
    Fraction() : num_(), den_(unit()) {}
    explicit Fraction(R n) : num_(std::move(n)), den_(unit()) {}
    Fraction(R n, R d) : num_(std::move(n)), den_(std::move(d)) {
        if (is_zero(den_)) throw std::domain_error("fraction with zero denominator");
    }

    const R& num() const { return num_; }
    const R& den() const { return den_; }
    bool is_zero_frac() const { return is_zero(num_); }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) {
        return Fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        if (a.is_zero_frac() || b.is_zero_frac()) return Fraction();
        return Fraction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) {
        if (b.is_zero_frac()) throw std::domain_error("division by zero fraction");
        if (a.is_zero_frac()) return Fraction();
        return Fraction(a.num_ * b.den_, a.den_ * b.num_);
    }
    Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
    Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
    Fraction& operator*=(const Fraction& o) { return *this = *this * o; }
    Fraction& operator/=(const Fraction& o) { return *this = *this / o; }
    Fraction operator-() const { return Fraction(R() - num_, den_); }

    Fraction pow(long e) const {
        Fraction base = *this;
        if (e < 0) {
            base = Fraction(unit()) / base;
            e = -e;
        }
        Fraction acc{unit()};
        for (long i = 0; i < e; ++i) acc *= base;
        return acc;
    }

    bool operator==(const Fraction& o) const { return is_zero(num_ * o.den_ - o.num_ * den_); }
    bool operator!=(const Fraction& o) const { return !(*this == o); }

  private:
    static R unit() {
        // R must be constructible from int with R(1) the multiplicative unit.
        return R(1);
    }
    R num_, den_;
};

template <class R>
bool is_zero(const Fraction<R>& f) {
    return f.is_zero_frac();
}

}  // namespace framix
