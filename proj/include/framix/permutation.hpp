#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

namespace framix {

// Permutation of {0..n-1}. Composition is (u * v)(j) = u(v(j)); braid words
// act left-to-right by right multiplication, so the rightmost letter acts
// first under application. This is the convention validated by the algebra
// relation tests.
class Permutation {
  public:
    explicit Permutation(int n = 0) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }
    explicit Permutation(std::vector<int> img) : img_(std::move(img)) {}

    static Permutation transposition(int n, int j) {
        // s_j swaps j and j+1 (0-based)
        if (j < 0 || j + 1 >= n) throw std::out_of_range("transposition index out of range");
        Permutation p(n);
        std::swap(p.img_[j], p.img_[j + 1]);
        return p;
    }

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int j) const { return img_.at(j); }
    const std::vector<int>& image() const { return img_; }
    bool is_identity() const {
        for (int j = 0; j < n(); ++j)
            if (img_[j] != j) return false;
        return true;
    }

    friend Permutation operator*(const Permutation& u, const Permutation& v) {
        if (u.n() != v.n()) throw std::invalid_argument("permutation size mismatch");
        std::vector<int> img(u.n());
        for (int j = 0; j < u.n(); ++j) img[j] = u.img_[v.img_[j]];
        return Permutation(std::move(img));
    }

    Permutation inverse() const {
        std::vector<int> img(n());
        for (int j = 0; j < n(); ++j) img[img_[j]] = j;
        return Permutation(std::move(img));
    }

    // right multiplication by s_j in place: w -> w * s_j (swap images at j, j+1)
    void right_swap(int j) {
        if (j < 0 || j + 1 >= n()) throw std::out_of_range("swap index out of range");
        std::swap(img_[j], img_[j + 1]);
    }

    // Coxeter length = inversion count
    int length() const {
        int len = 0;
        for (int i = 0; i < n(); ++i)
            for (int j = i + 1; j < n(); ++j)
                if (img_[i] > img_[j]) ++len;
        return len;
    }

    // true iff l(w * s_j) > l(w), i.e. w(j) < w(j+1)
    bool length_up(int j) const { return img_.at(j) < img_.at(j + 1); }

    // A reduced word: w equals the product of s_j over the returned letters
    // read left to right.
    std::vector<int> reduced_word() const {
        Permutation v = *this;
        std::vector<int> collected;
        bool progress = true;
        while (progress) {
            progress = false;
            for (int j = 0; j + 1 < v.n(); ++j) {
                if (v.img_[j] > v.img_[j + 1]) {
                    collected.push_back(j);
                    v.right_swap(j);
                    progress = true;
                    break;
                }
            }
        }
        // v = w * s_{j1} * ... * s_{jk} = id, so w = s_{jk} ... s_{j1}
        return {collected.rbegin(), collected.rend()};
    }

    // cycles of the permutation (closure components when this is a braid image)
    std::vector<std::vector<int>> cycles() const {
        std::vector<bool> seen(n(), false);
        std::vector<std::vector<int>> out;
        for (int j = 0; j < n(); ++j) {
            if (seen[j]) continue;
            std::vector<int> cyc;
            int k = j;
            while (!seen[k]) {
                seen[k] = true;
                cyc.push_back(k);
                k = img_[k];
            }
            out.push_back(std::move(cyc));
        }
        return out;
    }

    // Restriction to {0..m-1}; requires that the permutation maps it to itself.
    Permutation restricted(int m) const {
        std::vector<int> img(img_.begin(), img_.begin() + m);
        for (int v : img)
            if (v >= m) throw std::logic_error("permutation does not restrict");
        return Permutation(std::move(img));
    }

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

  private:
    std::vector<int> img_;
};

}  // namespace framix
