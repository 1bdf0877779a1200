#pragma once

#include <map>
#include <string>
#include <vector>

#include "framix/braid.hpp"
#include "framix/laurent.hpp"
#include "framix/permutation.hpp"
#include "framix/tracevalue.hpp"

namespace framix {

// Basis monomial t_1^{a_1} ... t_n^{a_n} g_w of the algebra engine.
struct YMonomial {
    std::vector<int> fr;  // framing vector, entries in [0, d)
    Permutation w;

    bool operator<(const YMonomial& o) const {
        if (fr != o.fr) return fr < o.fr;
        return w < o.w;
    }
    bool operator==(const YMonomial& o) const { return fr == o.fr && w == o.w; }
};

// Sparse element of Y_{d,n}(q) in normal form.
class YElement {
  public:
    YElement(int d, int n);

    int d() const { return d_; }
    int n() const { return n_; }
    const std::map<YMonomial, LaurentQ>& terms() const { return t_; }
    bool is_zero_elem() const { return t_.empty(); }

    static YElement unit(int d, int n);
    static YElement from_monomial(int d, int n, YMonomial m, const LaurentQ& c);

    void add_term(YMonomial m, const LaurentQ& c);
    YElement& operator+=(const YElement& o);
    YElement& operator-=(const YElement& o);
    friend YElement operator+(YElement a, const YElement& b) { return a += b; }
    friend YElement operator-(YElement a, const YElement& b) { return a -= b; }
    YElement scaled(const LaurentQ& k) const;

    // right multiplication by the generator g_j (0-based, 0 <= j <= n-2)
    YElement mult_g(int j) const;
    // right multiplication by g_j^{-1} = g_j - (q - q^{-1}) e_j
    YElement mult_g_inv(int j) const;
    // right multiplication by t_j^m (0-based strand j)
    YElement mult_t(int j, int m) const;
    // right multiplication by e_{i,j} (0-based strands)
    YElement mult_e_pair(int i, int j) const;

    friend YElement operator*(const YElement& x, const YElement& y);

    bool operator==(const YElement& o) const;
    bool operator!=(const YElement& o) const { return !(*this == o); }

    std::string str() const;

  private:
    void check(const YElement& o) const;
    int d_, n_;
    std::map<YMonomial, LaurentQ> t_;
};

inline bool is_zero(const YElement& x) { return x.is_zero_elem(); }

// Generator elements.
YElement y_g(int d, int n, int i);        // g_{i+1}, 0-based i
YElement y_g_inv(int d, int n, int i);
YElement y_t(int d, int n, int i);        // t_{i+1}, 0-based i
YElement y_e(int d, int n, int i);        // e_{i+1} = e_pair(i, i+1)
YElement y_e_pair(int d, int n, int i, int j);
YElement y_e_shift(int d, int n, int i, int m);  // e_i^{(m)} = t_i^m e_i

// Image of a framed braid word: framing monomial first, then the g-letters
// left to right (negative letters map to inverses).
YElement braid_to_element(const FramedBraidWord& b, int d, int n);
YElement braid_to_element(const FramedBraidWord& b);

// Juyumaya trace with generic parameters: a polynomial in z and x_1..x_{d-1}.
TraceValue y_trace(const YElement& x);

// Trace with parameters bound to the E-system solution values for D; the
// result is a polynomial in z over cyclotomic q-Laurent coefficients.
ZPolyC specialize_trace(const TraceValue& t, const std::vector<int>& D);

}  // namespace framix
