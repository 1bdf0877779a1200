#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "framix/invariants.hpp"

using namespace framix;

namespace {

std::mt19937_64 rng(20240822);

BraidWord rand_word(int n, int len) {
    BraidWord b;
    b.n = n;
    std::uniform_int_distribution<int> gen(1, n - 1), sign(0, 1);
    for (int i = 0; i < len; ++i) b.letters.push_back(gen(rng) * (sign(rng) ? 1 : -1));
    return b;
}

FramedBraidWord classical(const BraidWord& w) {
    FramedBraidWord fb;
    fb.word = w;
    fb.framings.assign(w.n, 0);
    fb.d = 1;
    return fb;
}

RationalFunction rf_mono(PVar v, int e) { return rf_var(v, e); }

const InvariantSpec HOM{InvariantKind::homflypt, 1, {}};
const InvariantSpec JONES{InvariantKind::jones, 1, {}};

}  // namespace

TEST_CASE("unknot is trivial for every kind") {
    for (const std::string& text : {"B1", "B2 s1", "B3 s1 s2", "B2 s1^-1"}) {
        FramedBraidWord b = parse_braid(text);
        CHECK(invariant(HOM, b) == RationalFunction(QSEPoly(1)));
        CHECK(invariant(JONES, b) == RationalFunction(QSEPoly(1)));
        CHECK(invariant({InvariantKind::theta_d, 2, {}}, b) == RationalFunction(QSEPoly(1)));
        CHECK(invariant({InvariantKind::theta_general, 1, {}}, b) == RationalFunction(QSEPoly(1)));
    }
}

TEST_CASE("hopf and trefoil closed forms") {
    FramedBraidWord hopf = parse_braid("B2 s1 s1");
    FramedBraidWord trefoil = parse_braid("B2 s1 s1 s1");

    // P(Hopf) = s [ (1 - s^2)/(q - q^{-1}) + (q - q^{-1}) ]
    RationalFunction qd{QSEPoly::var(PVar::q) - QSEPoly::var(PVar::q, -1)};
    RationalFunction oml{QSEPoly(1) - QSEPoly::var(PVar::s, 2)};
    CHECK(invariant(HOM, hopf) == rf_mono(PVar::s, 1) * (oml / qd + qd));

    // P(trefoil) = s^2 q^2 + s^2 q^{-2} - s^4
    QSEPoly p_tref;
    p_tref.add_term({2, 2, 0}, Rational(1));
    p_tref.add_term({-2, 2, 0}, Rational(1));
    p_tref.add_term({0, 4, 0}, Rational(-1));
    CHECK(invariant(HOM, trefoil) == RationalFunction(p_tref));

    // V(Hopf) = -q^5 - q, V(trefoil) = q^2 + q^6 - q^8
    QSEPoly v_hopf;
    v_hopf.add_term({5, 0, 0}, Rational(-1));
    v_hopf.add_term({1, 0, 0}, Rational(-1));
    CHECK(invariant(JONES, hopf) == RationalFunction(v_hopf));
    QSEPoly v_tref;
    v_tref.add_term({2, 0, 0}, Rational(1));
    v_tref.add_term({6, 0, 0}, Rational(1));
    v_tref.add_term({8, 0, 0}, Rational(-1));
    CHECK(invariant(JONES, trefoil) == RationalFunction(v_tref));

    // canonical text of the Hopf fraction
    CHECK(rf_str(invariant(HOM, trefoil)) == "q^-2*s^2 + q^2*s^2 - s^4");
}

TEST_CASE("knot coincidence in z-form") {
    BraidWord trefoil = parse_braid("B2 s1 s1 s1").word;
    BraidWord fig8 = parse_braid("s1 s2^-1 s1 s2^-1").word;  // inferred n = 3
    for (int d = 2; d <= 3; ++d) {
        CHECK(knot_coincidence_check(trefoil, d));
        CHECK(knot_coincidence_check(fig8, d));
    }
    CHECK(knot_coincidence_check(trefoil, 4, {1, 3}));
    CHECK_THROWS_AS(knot_coincidence_check(parse_braid("B2 s1 s1").word, 2), std::invalid_argument);

    int found = 0;
    while (found < 20) {
        BraidWord w = rand_word(2 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 8));
        if (closure_components(w).count != 1) continue;
        ++found;
        int d = 2 + static_cast<int>(rng() % 2);
        CHECK(knot_coincidence_check(w, d));
    }
}

TEST_CASE("disjoint unions carry the E factor") {
    BraidWord unlink2 = parse_braid("B2").word;
    BraidWord unlink3 = parse_braid("B3").word;
    BraidWord tref_split = parse_braid("B3 s1 s1 s1").word;  // trefoil plus a free strand
    BraidWord two_blocks = parse_braid("B4 s1 s1 s1 s3 s3 s3").word;
    for (int d = 2; d <= 3; ++d) {
        CHECK(disjoint_union_check(unlink2, d));
        CHECK(disjoint_union_check(unlink3, d));
        CHECK(disjoint_union_check(tref_split, d));
        CHECK(disjoint_union_check(two_blocks, d));
    }

    // split multiplicativity: Theta(L1 u L2) = mu_D Theta(L1) Theta(L2)
    InvariantSpec theta2{InvariantKind::theta_d, 2, {}};
    RationalFunction qd{QSEPoly::var(PVar::q) - QSEPoly::var(PVar::q, -1)};
    RationalFunction oml{QSEPoly(1) - QSEPoly::var(PVar::s, 2)};
    RationalFunction mu = oml / (rf_var(PVar::s) * qd * RationalFunction(QSEPoly(Rational(1, 2))));
    CHECK(invariant(theta2, classical(tref_split)) ==
          mu * invariant(theta2, parse_braid("B2 s1 s1 s1")) * invariant(theta2, parse_braid("B1")));
}

TEST_CASE("hopf link separates theta from homflypt") {
    for (int d = 1; d <= 3; ++d) CHECK(hopf_inequality_check(d));
    CHECK(hopf_inequality_check(4, {0, 2}));
    FramedBraidWord hopf = parse_braid("B2 s1 s1");
    CHECK(invariant({InvariantKind::theta_d, 2, {}}, hopf) != invariant(HOM, hopf));
}

TEST_CASE("lambda is the trace ratio of the two crossing signs") {
    for (int d = 1; d <= 3; ++d) CHECK(lambda_rescaling_check(d));
    CHECK(lambda_rescaling_check(2, {1}));
    CHECK(lambda_rescaling_check(4, {0, 2}));
}

TEST_CASE("markov invariance of the assembled invariants") {
    std::vector<InvariantSpec> specs = {HOM, JONES, {InvariantKind::theta_d, 2, {}},
                                        {InvariantKind::theta_d, 3, {}},
                                        {InvariantKind::theta_general, 1, {}}};
    for (int trial = 0; trial < 20; ++trial) {
        BraidWord w = rand_word(2 + static_cast<int>(rng() % 3), static_cast<int>(rng() % 7));
        int c = 1 + static_cast<int>(rng() % (w.n - 1));
        for (const auto& spec : specs) {
            RationalFunction base = invariant(spec, classical(w));
            CHECK(invariant(spec, classical(conjugate(w, c))) == base);
            CHECK(invariant(spec, classical(stabilize(w, +1))) == base);
            CHECK(invariant(spec, classical(stabilize(w, -1))) == base);
        }
    }
}

TEST_CASE("framed invariant: markov invariance and d = 1 degeneration") {
    for (int trial = 0; trial < 12; ++trial) {
        int d = 2 + static_cast<int>(rng() % 2);
        FramedBraidWord b;
        b.word = rand_word(2 + static_cast<int>(rng() % 2), static_cast<int>(rng() % 5));
        b.d = d;
        for (int i = 0; i < b.word.n; ++i) b.framings.push_back(static_cast<int>(rng() % d));
        RatFun<Cyclotomic> base = phi_invariant(d, {}, b);
        int c = 1 + static_cast<int>(rng() % (b.word.n - 1));
        CHECK(phi_invariant(d, {}, conjugate(b, c)) == base);
        CHECK(phi_invariant(d, {}, stabilize(b, +1)) == base);
        CHECK(phi_invariant(d, {}, stabilize(b, -1)) == base);
    }
    // d = 1: Phi is the Homflypt polynomial
    for (const std::string& text : {"B2 s1 s1", "B2 s1 s1 s1", "B3 s1 s2^-1 s1"}) {
        FramedBraidWord b = parse_braid(text);
        CHECK(crf_str(phi_invariant(1, {}, b)) == rf_str(invariant(HOM, b)));
    }
}

TEST_CASE("homflypt skein at every crossing of random words") {
    for (int trial = 0; trial < 25; ++trial) {
        BraidWord w = rand_word(2 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 6));
        for (int p = 0; p < static_cast<int>(w.letters.size()); ++p)
            CHECK(skein_check(SkeinKind::homflypt, classical(w), p));
    }
}

TEST_CASE("theta skein at mixed crossings") {
    FramedBraidWord hopf = parse_braid("B2 s1 s1");
    CHECK(skein_check(SkeinKind::theta_mixed, hopf, 0, 2));
    CHECK(skein_check(SkeinKind::theta_small_mixed, hopf, 0, 2));
    FramedBraidWord chain = parse_braid("B3 s1 s1 s2 s2");
    for (int p = 0; p < 4; ++p) {
        CHECK(skein_check(SkeinKind::theta_mixed, chain, p, 2));
        CHECK(skein_check(SkeinKind::theta_small_mixed, chain, p, 3));
    }
    // non-mixed position rejected
    FramedBraidWord tref = parse_braid("B2 s1 s1 s1");
    CHECK_THROWS_AS(skein_check(SkeinKind::theta_mixed, tref, 0, 2), std::invalid_argument);

    for (int trial = 0; trial < 15; ++trial) {
        BraidWord w = rand_word(2 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 6));
        int d = 2 + static_cast<int>(rng() % 2);
        for (int p : mixed_crossings(w)) {
            BraidWord plus = w;
            plus.letters[p] = std::abs(plus.letters[p]);
            std::vector<int> mp = mixed_crossings(plus);
            if (!std::count(mp.begin(), mp.end(), p)) continue;
            CHECK(skein_check(SkeinKind::theta_mixed, classical(w), p, d));
        }
    }
}

TEST_CASE("framed skein with the framing-insertion sum") {
    for (int d = 2; d <= 3; ++d) {
        FramedBraidWord b = parse_braid("B2 d=" + std::to_string(d) + " t1^1 s1 s1");
        CHECK(skein_check(SkeinKind::phi_framed, b, 0));
        CHECK(skein_check(SkeinKind::phi_framed, b, 1));
    }
    for (int trial = 0; trial < 8; ++trial) {
        int d = 2 + static_cast<int>(rng() % 2);
        FramedBraidWord b;
        b.word = rand_word(2 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 4));
        b.d = d;
        for (int i = 0; i < b.word.n; ++i) b.framings.push_back(static_cast<int>(rng() % d));
        int p = static_cast<int>(rng() % b.word.letters.size());
        CHECK(skein_check(SkeinKind::phi_framed, b, p));
    }
}

TEST_CASE("resolution oracle equals the trace pipeline") {
    std::vector<std::string> words = {"B2 s1 s1", "B2 s1 s1 s1", "B3 s1 s1 s2 s2",
                                      "B2 s1^-1 s1^-1", "B3 s1 s2^-1 s1 s2^-1",
                                      "B3 s1 s2^-1 s1 s2^-1 s1 s2^-1", "B2", "B3"};
    for (const auto& text : words) {
        BraidWord w = parse_braid(text).word;
        for (int d = 1; d <= 3; ++d) {
            InvariantSpec spec{InvariantKind::theta_d, d, {}};
            CHECK(skein_resolve_theta(w, d) == invariant(spec, classical(w)));
        }
    }
    for (int trial = 0; trial < 10; ++trial) {
        BraidWord w = rand_word(2 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 5));
        CHECK(skein_resolve_theta(w, 2) == invariant({InvariantKind::theta_d, 2, {}}, classical(w)));
    }
}

TEST_CASE("d = 1 collapse") {
    for (int trial = 0; trial < 15; ++trial) {
        BraidWord w = rand_word(2 + static_cast<int>(rng() % 3), static_cast<int>(rng() % 7));
        FramedBraidWord b = classical(w);
        CHECK(invariant({InvariantKind::theta_d, 1, {}}, b) == invariant(HOM, b));
        CHECK(invariant({InvariantKind::theta_small_d, 1, {}}, b) == invariant(JONES, b));
    }
}

TEST_CASE("difference polynomials and the E - 1 factor") {
    BraidWord a = parse_braid("B3 s1 s1 s2 s2").word;
    CHECK(theta_difference(a, a) == RationalFunction());
    // conjugate pair: theta-equivalent, difference identically zero
    CHECK(theta_difference(a, conjugate(a, 2)) == RationalFunction());

    // at E = 1 the general invariant collapses to Homflypt, so every
    // difference of same-P links carries the factor E - 1
    for (int trial = 0; trial < 10; ++trial) {
        BraidWord x = rand_word(3, 1 + static_cast<int>(rng() % 6));
        BraidWord y = rand_word(3, 1 + static_cast<int>(rng() % 6));
        RationalFunction diff = theta_difference(x, y);
        RationalFunction at1(diff.num().subst_E(Rational(1)), diff.den().subst_E(Rational(1)));
        RationalFunction pdiff = invariant(HOM, classical(x)) - invariant(HOM, classical(y));
        CHECK(at1 == pdiff);
    }
}
