#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "framix/braid.hpp"

using namespace framix;

namespace {

std::mt19937_64 rng(20240818);

BraidWord rand_word(int n, int len) {
    BraidWord b;
    b.n = n;
    std::uniform_int_distribution<int> gen(1, n - 1), sign(0, 1);
    for (int i = 0; i < len; ++i) b.letters.push_back(gen(rng) * (sign(rng) ? 1 : -1));
    return b;
}

}  // namespace

TEST_CASE("parse examples") {
    FramedBraidWord a = parse_braid("B2 s1 s1");
    CHECK(a.word.n == 2);
    CHECK(a.word.letters == std::vector<int>{1, 1});
    CHECK(a.framings == std::vector<int>{0, 0});
    CHECK(a.d == 1);

    FramedBraidWord b = parse_braid("B2 d=3 t1^2 s1");
    CHECK(b.word.letters == std::vector<int>{1});
    CHECK(b.framings == std::vector<int>{2, 0});
    CHECK(b.d == 3);

    FramedBraidWord c = parse_braid("B3 s1 s2^-1");
    CHECK(c.word.n == 3);
    CHECK(c.word.letters == std::vector<int>{1, -2});

    // inference: strand count = max index + 1
    CHECK(parse_braid("s1 s2").word.n == 3);

    CHECK_THROWS_AS(parse_braid("B2 x7"), std::invalid_argument);
    CHECK_THROWS_AS(parse_braid("B2 s5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_braid("B2 t1^1"), std::invalid_argument);  // framing with d = 1
}

TEST_CASE("framings collect to the top through the braid") {
    // s1 t1^1 in B2: the strand entering position 1 ends at position 2,
    // so the framing lands on slot 2 of the canonical form.
    FramedBraidWord a = parse_braid("B2 d=2 s1 t1^1");
    CHECK(a.framings == std::vector<int>{0, 1});
    FramedBraidWord b = parse_braid("B2 d=2 s1 t2^1");
    CHECK(b.framings == std::vector<int>{1, 0});
}

TEST_CASE("emit then parse round trips") {
    for (int trial = 0; trial < 200; ++trial) {
        FramedBraidWord b;
        b.word = rand_word(2 + static_cast<int>(rng() % 3), static_cast<int>(rng() % 7));
        b.d = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < b.word.n; ++i) b.framings.push_back(static_cast<int>(rng() % b.d));
        if (b.d == 1) b.framings.assign(b.word.n, 0);
        FramedBraidWord back = parse_braid(emit_braid(b));
        CHECK(back.word == b.word);
        CHECK(back.framings == b.framings);
        CHECK(back.d == b.d);
    }
}

TEST_CASE("closure components") {
    CHECK(closure_components(parse_braid("B2 s1 s1").word).count == 2);
    CHECK(closure_components(parse_braid("B2 s1 s1 s1").word).count == 1);
    CHECK(closure_components(parse_braid("B3").word).count == 3);
}

TEST_CASE("mixed crossings") {
    CHECK(mixed_crossings(parse_braid("B2 s1 s1").word) == std::vector<int>{0, 1});
    CHECK(mixed_crossings(parse_braid("B2 s1 s1 s1").word).empty());
    CHECK(mixed_crossings(parse_braid("B3 s1 s1 s2 s2").word) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("markov moves") {
    BraidWord hopf = parse_braid("B2 s1 s1").word;
    BraidWord st = stabilize(hopf, +1);
    CHECK(st.n == 3);
    CHECK(st.letters == std::vector<int>{1, 1, 2});
    CHECK(destabilize(st) == hopf);

    BraidWord tref = parse_braid("B2 s1 s1 s1").word;
    BraidWord conj = conjugate(tref, 1);
    CHECK(conj.letters == std::vector<int>{1, 1, 1, 1, -1});

    CHECK_THROWS_AS(destabilize(parse_braid("B3 s2 s2").word), std::invalid_argument);
}

TEST_CASE("permutation and exponent-sum properties") {
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        BraidWord a = rand_word(n, static_cast<int>(rng() % 6));
        BraidWord b = rand_word(n, static_cast<int>(rng() % 6));

        // permutation ignores letter signs
        BraidWord abs_a = a;
        for (int& l : abs_a.letters) l = std::abs(l);
        CHECK(a.permutation() == abs_a.permutation());

        // exponent sum additive under concatenation
        CHECK((a * b).exponent_sum() == a.exponent_sum() + b.exponent_sum());

        // reversal-with-inversion negates the exponent sum
        BraidWord rev;
        rev.n = n;
        for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) rev.letters.push_back(-*it);
        CHECK(rev.exponent_sum() == -a.exponent_sum());

        // Markov moves preserve component count
        int comps = closure_components(a).count;
        CHECK(closure_components(conjugate(a, 1)).count == comps);
        CHECK(closure_components(stabilize(a, -1)).count == comps);
    }
}

TEST_CASE("catalog parsing") {
    auto recs = parse_catalog(
        "# comment line\n"
        "\n"
        "hopf|2|1 1|\n"
        "trefoil|2|1 1 1||homflypt=q^2\n"
        "framed|2|1 1|1,0|\n");
    REQUIRE(recs.size() == 3);
    CHECK(recs[0].name == "hopf");
    CHECK(recs[0].braid.word.letters == std::vector<int>{1, 1});
    CHECK(recs[1].fixtures.at("homflypt") == "q^2");
    CHECK(recs[2].braid.framings == std::vector<int>{1, 0});

    CHECK_THROWS_AS(parse_catalog("hopf|2|1 1|\nhopf|2|1 1|\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_catalog("bad|2|9 9|\n"), std::invalid_argument);
}
