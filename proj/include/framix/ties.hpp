#pragma once

#include <map>
#include <string>
#include <vector>

#include "framix/laurent.hpp"
#include "framix/permutation.hpp"
#include "framix/tracevalue.hpp"
#include "framix/yokonuma.hpp"

namespace framix {

// Set partition of {0..n-1} in canonical form: block_of[k] is the block
// index of k, blocks numbered in order of their minimal elements.
class SetPartition {
  public:
    explicit SetPartition(int n = 0) : block_of_(n) {
        for (int i = 0; i < n; ++i) block_of_[i] = i;
    }

    int n() const { return static_cast<int>(block_of_.size()); }
    int block_of(int k) const { return block_of_.at(k); }
    int block_count() const;
    std::vector<std::vector<int>> blocks() const;

    // join the blocks containing i and j (finest common coarsening step)
    SetPartition joined(int i, int j) const;
    // join with another partition (blockwise union-closure)
    SetPartition joined(const SetPartition& o) const;
    // remove element n-1, keeping the rest
    SetPartition without_top() const;
    bool is_singleton(int k) const;

    bool operator<(const SetPartition& o) const { return block_of_ < o.block_of_; }
    bool operator==(const SetPartition& o) const { return block_of_ == o.block_of_; }
    bool operator!=(const SetPartition& o) const { return !(*this == o); }

    std::string str() const;

  private:
    void canonicalize();
    std::vector<int> block_of_;
};

struct TiedMonomial {
    SetPartition part;
    Permutation w;

    bool operator<(const TiedMonomial& o) const {
        if (part != o.part) return part < o.part;
        return w < o.w;
    }
    bool operator==(const TiedMonomial& o) const { return part == o.part && w == o.w; }
};

// Sparse element of the braids-and-ties algebra.
class EElement {
  public:
    explicit EElement(int n);

    int n() const { return n_; }
    const std::map<TiedMonomial, LaurentQ>& terms() const { return t_; }
    bool is_zero_elem() const { return t_.empty(); }

    static EElement unit(int n);
    static EElement from_monomial(int n, TiedMonomial m, const LaurentQ& c);

    void add_term(TiedMonomial m, const LaurentQ& c);
    EElement& operator+=(const EElement& o);
    EElement& operator-=(const EElement& o);
    friend EElement operator+(EElement a, const EElement& b) { return a += b; }
    friend EElement operator-(EElement a, const EElement& b) { return a -= b; }
    EElement scaled(const LaurentQ& k) const;

    EElement mult_b(int j) const;       // right multiplication by b_{j+1}, 0-based j
    EElement mult_b_inv(int j) const;   // b_j^{-1} = b_j - (q - q^{-1}) eps_j
    EElement mult_eps(int i, int j) const;  // right multiplication by eps_{i,j}

    friend EElement operator*(const EElement& x, const EElement& y);

    bool operator==(const EElement& o) const;
    bool operator!=(const EElement& o) const { return !(*this == o); }

    std::string str() const;

  private:
    void check(const EElement& o) const;
    int n_;
    std::map<TiedMonomial, LaurentQ> t_;
};

inline bool is_zero(const EElement& x) { return x.is_zero_elem(); }

EElement eb(int n, int i);        // b_{i+1}
EElement eb_inv(int n, int i);
EElement eeps(int n, int i);      // eps_{i+1} = eps_pair(i, i+1)
EElement eeps_pair(int n, int i, int j);

// Image of a classical braid word (framings must be zero).
EElement braid_to_eelement(const BraidWord& b, int n);
EElement braid_to_eelement(const BraidWord& b);

// Markov trace with parameters z and symbolic E; result layout [z, E].
TraceValue e_trace(const EElement& x);

// The comparison map into Y_{d,n}(q): b_i -> g_i, eps_i -> e_i; partition
// blocks expand to products of e_{i,j} over spanning edges.
YElement phi_map(const EElement& x, int d);

}  // namespace framix
