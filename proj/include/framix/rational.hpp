#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace framix {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps gcd(num, den) = 1 and den > 0,
// which is exactly the canonical form required everywhere in this project.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long n, long d = 1) { return Rational(n, d); }

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline Rational pow_rat(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base.is_zero()) {
        if (e < 0) throw std::domain_error("0 raised to a negative power");
        return Rational(0);
    }
    Rational acc(1);
    Rational b = e < 0 ? Rational(denominator(base), numerator(base)) : base;
    for (long i = 0; i < (e < 0 ? -e : e); ++i) acc *= b;
    return acc;
}

// Canonical printing: "a/b", the "/b" omitted when b = 1.
inline std::string rat_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline Rational rat_parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

}  // namespace framix
