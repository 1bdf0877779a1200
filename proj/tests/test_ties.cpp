#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "framix/ties.hpp"
#include "framix/yokonuma.hpp"

using namespace framix;

namespace {

std::mt19937_64 rng(20240820);

EElement rand_eelement(int n, int len) {
    EElement x = EElement::unit(n);
    std::uniform_int_distribution<int> kind(0, 2), gen(0, n - 2);
    for (int i = 0; i < len; ++i) {
        switch (kind(rng)) {
            case 0: x = x.mult_b(gen(rng)); break;
            case 1: x = x.mult_b_inv(gen(rng)); break;
            default: {
                int i = gen(rng);
                x = x.mult_eps(i, i + 1);
                break;
            }
        }
    }
    return x;
}

BraidWord rand_word(int n, int len) {
    BraidWord b;
    b.n = n;
    std::uniform_int_distribution<int> gen(1, n - 1), sign(0, 1);
    for (int i = 0; i < len; ++i) b.letters.push_back(gen(rng) * (sign(rng) ? 1 : -1));
    return b;
}

}  // namespace

TEST_CASE("tie idempotents and quadratic") {
    // eps_1^2 = eps_1
    CHECK(eeps(3, 0).mult_eps(0, 1) == eeps(3, 0));
    // b_1^2 = 1 + (q - q^-1) eps_1 b_1
    EElement lhs = eb(2, 0).mult_b(0);
    EElement rhs = EElement::unit(2) + eeps(2, 0).mult_b(0).scaled(lq_qdiff());
    CHECK(lhs == rhs);
    // eps_1 b_2 b_1 = b_2 b_1 eps_2
    CHECK(eeps(3, 0).mult_b(1).mult_b(0) == eb(3, 1).mult_b(0).mult_eps(1, 2));
    // b_1 b_1^{-1} = 1
    CHECK(eb(3, 0).mult_b_inv(0) == EElement::unit(3));
}

TEST_CASE("all nine presentation relations") {
    for (int n = 3; n <= 4; ++n) {
        for (int i = 0; i + 1 < n; ++i) {
            // (b1) b_i b_j = b_j b_i for |i-j| >= 2
            for (int j = 0; j + 1 < n; ++j)
                if (std::abs(i - j) >= 2) CHECK(eb(n, i).mult_b(j) == eb(n, j).mult_b(i));
            // (b2) braid relation
            if (i + 2 < n)
                CHECK(eb(n, i).mult_b(i + 1).mult_b(i) == eb(n, i + 1).mult_b(i).mult_b(i + 1));
            // (e1) eps_i eps_j = eps_j eps_i
            for (int j = 0; j + 1 < n; ++j)
                CHECK(eeps(n, i).mult_eps(j, j + 1) == eeps(n, j).mult_eps(i, i + 1));
            // (e2) eps_i^2 = eps_i
            CHECK(eeps(n, i).mult_eps(i, i + 1) == eeps(n, i));
            // (be1) eps_i b_i = b_i eps_i
            CHECK(eeps(n, i).mult_b(i) == eb(n, i).mult_eps(i, i + 1));
            // (be2) eps_i b_j = b_j eps_i for |i-j| >= 2
            for (int j = 0; j + 1 < n; ++j)
                if (std::abs(i - j) >= 2) CHECK(eeps(n, i).mult_b(j) == eb(n, j).mult_eps(i, i + 1));
            // (be3/be4) eps_i b_j b_i = b_j b_i eps_j, eps_j b_i b_j = b_i b_j eps_i for |i-j|=1
            for (int j = 0; j + 1 < n; ++j)
                if (std::abs(i - j) == 1) {
                    CHECK(eeps(n, i).mult_b(j).mult_b(i) == eb(n, j).mult_b(i).mult_eps(j, j + 1));
                    // (be5) eps_i eps_j b_i = b_i eps_i eps_j = eps_j b_i eps_i
                    EElement a = eeps(n, i).mult_eps(j, j + 1).mult_b(i);
                    EElement b = eb(n, i).mult_eps(i, i + 1).mult_eps(j, j + 1);
                    EElement c = eeps(n, j).mult_b(i).mult_eps(i, i + 1);
                    CHECK(a == b);
                    CHECK(b == c);
                }
            // quadratic
            CHECK(eb(n, i).mult_b(i) == EElement::unit(n) + eeps(n, i).mult_b(i).scaled(lq_qdiff()));
        }
    }
}

TEST_CASE("trace basics") {
    CHECK(e_trace(eb(2, 0)) == TraceValue::z_var(1));
    CHECK(e_trace(eeps(2, 0)) == TraceValue::e_var(1));
    CHECK(e_trace(eeps(2, 0).mult_b(0)) == TraceValue::z_var(1));
    // image of sigma_1^2: 1 + (q - q^-1) z
    TraceValue t = e_trace(eb(2, 0).mult_b(0));
    CHECK(t == TraceValue::one(1) + TraceValue::z_var(1).scaled(lq_qdiff()));
}

TEST_CASE("trace axioms on random elements") {
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        EElement a = rand_eelement(n, 3), b = rand_eelement(n, 3);
        CHECK(e_trace(a * b) == e_trace(b * a));
    }
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 2);
        EElement a = rand_eelement(n, 4);
        EElement big(n + 1);
        for (const auto& [m, c] : a.terms()) {
            SetPartition part(n + 1);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (m.part.block_of(i) == m.part.block_of(j)) part = part.joined(i, j);
            std::vector<int> img = m.w.image();
            img.push_back(n);
            big.add_term(TiedMonomial{part, Permutation(std::move(img))}, c);
        }
        TraceValue base = e_trace(a);
        CHECK(e_trace(big.mult_b(n - 1)) == TraceValue::z_var(1) * base);
        // tr(a eps_n b_n) = z tr(a)
        CHECK(e_trace(big.mult_eps(n - 1, n).mult_b(n - 1)) == TraceValue::z_var(1) * base);
        // tr(a eps_n) = E tr(a)
        CHECK(e_trace(big.mult_eps(n - 1, n)) == TraceValue::e_var(1) * base);
    }
}

TEST_CASE("presentation switch") {
    // bt_i := b_i + (q-1) eps_i b_i satisfies the u-quadratic with u = q^2
    for (int n = 2; n <= 3; ++n) {
        EElement b = eb(n, 0), e = eeps(n, 0);
        LaurentQ qm1 = lq_q(1) - lq_one();
        LaurentQ um1 = lq_q(2) - lq_one();
        EElement bt = b + e.mult_b(0).scaled(qm1);
        CHECK(bt * bt == EElement::unit(n) + e.scaled(um1) + (e * bt).scaled(um1));
        // inverse switch: b_i = bt_i + (q^{-1} - 1) eps_i bt_i
        EElement back = bt + (e * bt).scaled(lq_q(-1) - lq_one());
        CHECK(back == b);
    }
}

TEST_CASE("phi is a homomorphism matching the generators") {
    for (int d = 2; d <= 3; ++d) {
        CHECK(phi_map(eeps(3, 0), d) == y_e(d, 3, 0));
        CHECK(phi_map(eb(3, 0).mult_b(0), d) == y_g(d, 3, 0).mult_g(0));
        // full-block partition {1,2,3} -> e1 e2
        EElement blk = eeps(3, 0).mult_eps(1, 2);
        CHECK(phi_map(blk, d) == y_e(d, 3, 0) * y_e(d, 3, 1));
    }
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        int d = 2 + static_cast<int>(rng() % 2);
        EElement a = rand_eelement(n, 3), b = rand_eelement(n, 3);
        CHECK(phi_map(a * b, d) == phi_map(a, d) * phi_map(b, d));
    }
}

TEST_CASE("cross-engine trace oracle") {
    // ties trace with E -> 1/d equals the specialized Y trace through phi
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        int d = 1 + static_cast<int>(rng() % 3);
        BraidWord w = rand_word(n, static_cast<int>(rng() % 9));
        EElement ex = braid_to_eelement(w);
        TraceValue et = e_trace(ex);
        ZPolyC lhs = et.specialize({}, Rational(1, d));

        FramedBraidWord fb;
        fb.word = w;
        fb.framings.assign(n, 0);
        fb.d = d;
        std::vector<int> D;
        for (int m = 0; m < d; ++m) D.push_back(m);
        ZPolyC rhs = specialize_trace(y_trace(braid_to_element(fb)), D);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("phi injectivity spot check") {
    // for d >= n <= 3, phi on the monomial basis has linearly independent images
    for (int n = 2; n <= 3; ++n) {
        int d = n;
        // enumerate tied monomials: all set partitions x all permutations
        std::vector<TiedMonomial> basis;
        std::vector<int> perm_img(n);
        for (int i = 0; i < n; ++i) perm_img[i] = i;
        std::vector<Permutation> perms;
        do {
            perms.push_back(Permutation(std::vector<int>(perm_img)));
        } while (std::next_permutation(perm_img.begin(), perm_img.end()));
        std::vector<SetPartition> parts;
        if (n == 2) {
            parts.push_back(SetPartition(2));
            parts.push_back(SetPartition(2).joined(0, 1));
        } else {
            SetPartition p3(3);
            parts = {p3, p3.joined(0, 1), p3.joined(0, 2), p3.joined(1, 2), p3.joined(0, 1).joined(0, 2)};
        }
        for (const auto& p : parts)
            for (const auto& w : perms) basis.push_back(TiedMonomial{p, w});

        // collect images as sparse vectors over the Y basis and Gauss-eliminate
        std::vector<std::map<YMonomial, Rational>> rows;
        for (const auto& m : basis) {
            YElement img = phi_map(EElement::from_monomial(n, m, lq_one()), d);
            std::map<YMonomial, Rational> row;
            for (const auto& [ym, c] : img.terms()) {
                // coefficients here are rational constants
                REQUIRE(c.terms().size() == 1);
                REQUIRE(c.terms().begin()->first == 0);
                row[ym] = c.terms().begin()->second;
            }
            rows.push_back(std::move(row));
        }
        size_t rank = 0;
        // gaussian elimination
        std::vector<std::map<YMonomial, Rational>> reduced;
        for (auto row : rows) {
            for (const auto& r : reduced) {
                if (row.empty()) break;
                auto pivot = r.begin();
                auto it = row.find(pivot->first);
                if (it != row.end()) {
                    Rational f = it->second / pivot->second;
                    for (const auto& [k, v] : r) {
                        row[k] -= f * v;
                        if (row[k].is_zero()) row.erase(k);
                    }
                }
            }
            if (!row.empty()) {
                reduced.push_back(std::move(row));
                ++rank;
            }
        }
        CHECK(rank == basis.size());
    }
}
