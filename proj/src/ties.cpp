#include "framix/ties.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace framix {

void SetPartition::canonicalize() {
    std::vector<int> remap(block_of_.size(), -1);
    int next = 0;
    for (int& b : block_of_) {
        if (remap[b] == -1) remap[b] = next++;
        b = remap[b];
    }
}

int SetPartition::block_count() const {
    int mx = -1;
    for (int b : block_of_) mx = std::max(mx, b);
    return mx + 1;
}

std::vector<std::vector<int>> SetPartition::blocks() const {
    std::vector<std::vector<int>> out(block_count());
    for (int k = 0; k < n(); ++k) out[block_of_[k]].push_back(k);
    return out;
}

SetPartition SetPartition::joined(int i, int j) const {
    SetPartition r = *this;
    int a = r.block_of_[i], b = r.block_of_[j];
    if (a != b) {
        for (int& x : r.block_of_)
            if (x == b) x = a;
        r.canonicalize();
    }
    return r;
}

SetPartition SetPartition::joined(const SetPartition& o) const {
    SetPartition r = *this;
    for (const auto& blk : o.blocks())
        for (size_t i = 1; i < blk.size(); ++i) r = r.joined(blk[0], blk[i]);
    return r;
}

SetPartition SetPartition::without_top() const {
    SetPartition r(n() - 1);
    for (int k = 0; k + 1 < n(); ++k) r.block_of_[k] = block_of_[k];
    r.canonicalize();
    return r;
}

bool SetPartition::is_singleton(int k) const {
    for (int i = 0; i < n(); ++i)
        if (i != k && block_of_[i] == block_of_[k]) return false;
    return true;
}

std::string SetPartition::str() const {
    std::ostringstream out;
    out << "{";
    bool firstb = true;
    for (const auto& blk : blocks()) {
        if (!firstb) out << "|";
        firstb = false;
        for (size_t i = 0; i < blk.size(); ++i) out << (i ? "," : "") << (blk[i] + 1);
    }
    out << "}";
    return out.str();
}

EElement::EElement(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("bad strand count");
}

EElement EElement::unit(int n) {
    return from_monomial(n, TiedMonomial{SetPartition(n), Permutation(n)}, lq_one());
}

EElement EElement::from_monomial(int n, TiedMonomial m, const LaurentQ& c) {
    EElement e(n);
    e.add_term(std::move(m), c);
    return e;
}

void EElement::add_term(TiedMonomial m, const LaurentQ& c) {
    if (is_zero(c)) return;
    if (m.part.n() != n_ || m.w.n() != n_) throw std::logic_error("tied monomial size mismatch");
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (is_zero(it->second)) t_.erase(it);
    }
}

void EElement::check(const EElement& o) const {
    if (n_ != o.n_) throw std::invalid_argument("strand count mismatch");
}

EElement& EElement::operator+=(const EElement& o) {
    check(o);
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

EElement& EElement::operator-=(const EElement& o) {
    check(o);
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

EElement EElement::scaled(const LaurentQ& k) const {
    EElement r(n_);
    if (is_zero(k)) return r;
    for (const auto& [m, c] : t_) r.add_term(m, c * k);
    return r;
}

EElement EElement::mult_b(int j) const {
    if (j < 0 || j + 1 >= n_) throw std::out_of_range("generator index out of range");
    EElement r(n_);
    const LaurentQ qd = lq_qdiff();
    for (const auto& [m, c] : t_) {
        TiedMonomial up = m;
        up.w.right_swap(j);
        if (m.w.length_up(j)) {
            r.add_term(std::move(up), c);
        } else {
            // b_w b_j = b_{w s_j} + (q - q^-1) eps_{v(j), v(j+1)} b_w, v = w s_j
            int p = up.w(j), s2 = up.w(j + 1);
            r.add_term(up, c);
            TiedMonomial corr = m;
            corr.part = corr.part.joined(p, s2);
            r.add_term(std::move(corr), c * qd);
        }
    }
    return r;
}

EElement EElement::mult_eps(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j) throw std::out_of_range("tie indices out of range");
    EElement r(n_);
    for (const auto& [m, c] : t_) {
        TiedMonomial mm = m;
        mm.part = mm.part.joined(m.w(i), m.w(j));
        r.add_term(std::move(mm), c);
    }
    return r;
}

EElement EElement::mult_b_inv(int j) const {
    EElement r = mult_b(j);
    r -= mult_eps(j, j + 1).scaled(lq_qdiff());
    return r;
}

EElement operator*(const EElement& x, const EElement& y) {
    x.check(y);
    EElement r(x.n());
    for (const auto& [m, c] : y.terms()) {
        EElement acc = x.scaled(c);
        for (const auto& blk : m.part.blocks())
            for (size_t i = 1; i < blk.size(); ++i) acc = acc.mult_eps(blk[0], blk[i]);
        for (int letter : m.w.reduced_word()) acc = acc.mult_b(letter);
        r += acc;
    }
    return r;
}

bool EElement::operator==(const EElement& o) const { return n_ == o.n_ && t_ == o.t_; }

std::string EElement::str() const {
    if (t_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : t_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str("q") << ")*" << m.part.str();
        for (int l : m.w.reduced_word()) out << "*b" << (l + 1);
    }
    return out.str();
}

EElement eb(int n, int i) { return EElement::unit(n).mult_b(i); }
EElement eb_inv(int n, int i) { return EElement::unit(n).mult_b_inv(i); }
EElement eeps_pair(int n, int i, int j) { return EElement::unit(n).mult_eps(i, j); }
EElement eeps(int n, int i) { return eeps_pair(n, i, i + 1); }

EElement braid_to_eelement(const BraidWord& b, int n) {
    if (b.n > n) throw std::invalid_argument("braid needs more strands than the algebra has");
    EElement x = EElement::unit(n);
    for (int l : b.letters) x = l > 0 ? x.mult_b(l - 1) : x.mult_b_inv(-l - 1);
    return x;
}

EElement braid_to_eelement(const BraidWord& b) { return braid_to_eelement(b, b.n); }

namespace {

TraceValue e_trace_monomial(const TiedMonomial& m) {
    const int n = m.w.n();
    const int T = n - 1;
    // variable layout for the ties trace: [z, E]
    if (m.w(T) == T) {
        TraceValue f = m.part.is_singleton(T) ? TraceValue::one(1) : TraceValue::e_var(1);
        if (n == 1) return f;
        TiedMonomial sub{m.part.without_top(), m.w.restricted(T)};
        return f * e_trace_monomial(sub);
    }
    const int i = m.w.inverse()(T);
    Permutation c(n);
    for (int j = T - 1; j >= i; --j) c.right_swap(j);
    Permutation wp = m.w * c.inverse();
    // the peeled strand's tie (if any) transports to strand wp(T-1)
    SetPartition part = m.part;
    if (!part.is_singleton(T)) part = part.joined(T, wp(T - 1));
    part = part.without_top();
    EElement x = EElement::from_monomial(T, TiedMonomial{std::move(part), wp.restricted(T)}, lq_one());
    for (int j = T - 2; j >= i; --j) x = x.mult_b(j);
    return TraceValue::z_var(1) * e_trace(x);
}

}  // namespace

TraceValue e_trace(const EElement& x) {
    TraceValue out(1);
    for (const auto& [m, c] : x.terms()) out += e_trace_monomial(m).scaled(c);
    return out;
}

YElement phi_map(const EElement& x, int d) {
    YElement r(d, x.n());
    for (const auto& [m, c] : x.terms()) {
        YElement acc = YElement::unit(d, x.n()).scaled(c);
        for (const auto& blk : m.part.blocks())
            for (size_t i = 1; i < blk.size(); ++i) acc = acc.mult_e_pair(blk[0], blk[i]);
        for (int letter : m.w.reduced_word()) acc = acc.mult_g(letter);
        r += acc;
    }
    return r;
}

}  // namespace framix
