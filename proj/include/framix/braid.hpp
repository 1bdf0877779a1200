#pragma once

#include <map>
#include <string>
#include <vector>

#include "framix/permutation.hpp"

namespace framix {

// Classical braid word on n strands. Letters are nonzero signed integers:
// k means the elementary braiding sigma_k, -k its inverse, 1 <= |k| <= n-1.
struct BraidWord {
    int n = 1;
    std::vector<int> letters;

    void validate() const;

    // underlying permutation (left-to-right fold; rightmost letter applied first)
    Permutation permutation() const {
        Permutation p(n);
        for (int l : letters) p.right_swap(std::abs(l) - 1);
        return p;
    }

    // algebraic exponent sum of the braiding letters
    int exponent_sum() const {
        int e = 0;
        for (int l : letters) e += l > 0 ? 1 : -1;
        return e;
    }

    friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
    bool operator==(const BraidWord& o) const { return n == o.n && letters == o.letters; }
};

// Braid word plus a framing vector modulo d. d = 1 forces zero framings.
struct FramedBraidWord {
    BraidWord word;
    std::vector<int> framings;  // length n, entries in [0, d)
    int d = 1;

    void validate() const;
    std::string str() const;
};

// Closure component analysis: count and a component label per strand,
// components numbered by their minimal strand.
struct ClosureComponents {
    int count = 0;
    std::vector<int> label;  // strand -> component index
};
ClosureComponents closure_components(const BraidWord& b);

// Positions (0-based into letters) whose crossing involves strands of two
// different closure components.
std::vector<int> mixed_crossings(const BraidWord& b);

// Markov moves, used by the invariance harnesses.
BraidWord conjugate(const BraidWord& b, int letter);
BraidWord stabilize(const BraidWord& b, int sign);
BraidWord destabilize(const BraidWord& b);
FramedBraidWord stabilize(const FramedBraidWord& b, int sign);
FramedBraidWord conjugate(const FramedBraidWord& b, int letter);

// Parser for the braid text grammar: whitespace-separated tokens `B<n>`,
// `d=<d>`, `s<k>`, `s<k>^-1`, `t<i>^<a>`. Strand count from the header or
// inferred as max index + 1; framings are collected to the top of the braid.
FramedBraidWord parse_braid(const std::string& text);

// Canonical emission; parse(emit(b)) == b.
std::string emit_braid(const FramedBraidWord& b);

// Catalog of named links.
struct LinkRecord {
    std::string name;
    FramedBraidWord braid;
    std::map<std::string, std::string> fixtures;  // key -> canonical polynomial text
};

std::vector<LinkRecord> load_catalog(const std::string& path);
std::vector<LinkRecord> parse_catalog(const std::string& content);

}  // namespace framix
