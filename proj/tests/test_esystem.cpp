#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "framix/esystem.hpp"

using namespace framix;

namespace {

std::mt19937_64 rng(20240821);

GroupAlgebraElement rand_elem(int d) {
    GroupAlgebraElement e(d);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4), pw(0, d - 1);
    for (int k = 0; k < d; ++k)
        e.c[k] = Cyclotomic::zeta_pow(d, pw(rng)) * Cyclotomic(d, Rational(num(rng), den(rng)));
    return e;
}

GroupAlgebraElement reversed(const GroupAlgebraElement& y) {
    GroupAlgebraElement r(y.d);
    for (int k = 0; k < y.d; ++k) r.c[k] = y.at(y.d - k);
    return r;
}

}  // namespace

TEST_CASE("convolution and pointwise basics") {
    for (int d = 2; d <= 6; ++d) {
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                CHECK(convolve(GroupAlgebraElement::delta(d, a), GroupAlgebraElement::delta(d, b)) ==
                      GroupAlgebraElement::delta(d, a + b));
                // i_a . i_b = i_{a+b} (pointwise product of characters)
                CHECK(pointwise(GroupAlgebraElement::character(d, a), GroupAlgebraElement::character(d, b)) ==
                      GroupAlgebraElement::character(d, a + b));
            }
        // i_a * i_a = d i_a (character orthogonality)
        for (int a = 0; a < d; ++a) {
            GroupAlgebraElement ia = GroupAlgebraElement::character(d, a);
            CHECK(convolve(ia, ia) == scale(ia, Cyclotomic(d)));
            for (int b = 0; b < d; ++b)
                if (b != a) {
                    GroupAlgebraElement z(d);
                    CHECK(convolve(ia, GroupAlgebraElement::character(d, b)) == z);
                }
        }
    }
}

TEST_CASE("(x * x)(0) is the displayed sum") {
    for (int d = 2; d <= 5; ++d) {
        GroupAlgebraElement x = rand_elem(d);
        Cyclotomic want = Cyclotomic::zero(d);
        for (int s = 0; s < d; ++s) want += x.at(s) * x.at(d - s);
        CHECK(convolve(x, x).c[0] == want);
    }
}

TEST_CASE("fourier transform properties") {
    for (int d = 2; d <= 8; ++d) {
        for (int a = 0; a < d; ++a) {
            CHECK(fourier(GroupAlgebraElement::delta(d, a)) == GroupAlgebraElement::character(d, -a));
            CHECK(fourier(GroupAlgebraElement::character(d, a)) ==
                  scale(GroupAlgebraElement::delta(d, a), Cyclotomic(d)));
        }
        for (int trial = 0; trial < 200; ++trial) {
            GroupAlgebraElement y = rand_elem(d), yp = rand_elem(d);
            // hat(y * y') = hat(y) . hat(y')
            CHECK(fourier(convolve(y, yp)) == pointwise(fourier(y), fourier(yp)));
            // hat(y . y') = (1/d) hat(y) * hat(y')
            CHECK(fourier(pointwise(y, yp)) ==
                  scale(convolve(fourier(y), fourier(yp)), Cyclotomic(d, Rational(1, d))));
            // double hat = d . coefficient reversal
            CHECK(fourier(fourier(y)) == scale(reversed(y), Cyclotomic(d)));
        }
    }
}

TEST_CASE("solutions from subsets") {
    ESystemSolution s1 = esystem_solution(2, {1});
    CHECK(s1.x[0] == Cyclotomic(-1));
    CHECK(s1.E == Rational(1));

    ESystemSolution triv = esystem_solution(5, {0, 1, 2, 3, 4});
    for (const auto& v : triv.x) CHECK(v.is_zero_elem());
    CHECK(triv.E == Rational(1, 5));

    ESystemSolution s42 = esystem_solution(4, {0, 2});
    CHECK(s42.x[0].is_zero_elem());
    CHECK(s42.x[1] == Cyclotomic(1));
    CHECK(s42.x[2].is_zero_elem());
    CHECK(s42.E == Rational(1, 2));
}

TEST_CASE("verify examples") {
    CHECK(verify_esystem(2, {Cyclotomic(0)}));    // x = (1, 0)
    CHECK(verify_esystem(2, {Cyclotomic(-1)}));   // x = (1, -1)
    CHECK(!verify_esystem(2, {Cyclotomic(2)}));   // x = (1, 2)
}

TEST_CASE("completeness for small d") {
    for (int d = 1; d <= 6; ++d) {
        auto sols = all_esystem_solutions(d);
        CHECK(static_cast<int>(sols.size()) == (1 << d) - 1);
        std::set<std::string> seen;
        for (const auto& sol : sols) {
            CHECK(verify_esystem(d, sol.x));
            seen.insert(sol.str());
            // E-condition: E^{(m)} = x_m E for every m
            Cyclotomic E(d, sol.E);
            for (int m = 0; m < d; ++m) {
                Cyclotomic xm = m == 0 ? Cyclotomic(1) : sol.x[m - 1];
                CHECK(e_shift_value(sol, m) == xm * E);
            }
        }
        CHECK(seen.size() == sols.size());

        // exhaustive search: solutions of the E-system are exactly the subset
        // solutions. In the Fourier domain x-hat must be |D|^{-1}-scaled
        // indicator; equivalently test all 0/1 spectra.
        std::set<std::string> found;
        for (unsigned mask = 1; mask < (1u << d); ++mask) {
            GroupAlgebraElement xhat(d);
            int size = 0;
            for (int m = 0; m < d; ++m)
                if (mask & (1u << m)) {
                    xhat.c[m] = Cyclotomic(1);
                    ++size;
                }
            // x = (1/|D|) * d^{-1} * hat-inverse; build x directly and verify
            std::vector<int> D;
            for (int m = 0; m < d; ++m)
                if (mask & (1u << m)) D.push_back(m);
            ESystemSolution sol = esystem_solution(d, D);
            CHECK(verify_esystem(d, sol.x));
            found.insert(sol.str());
        }
        CHECK(found == seen);
    }
}

TEST_CASE("fourier characterization: x solves the E-system iff spectrum is an indicator") {
    // x * x = (x * x)(0) x with x(0)=1 transforms to xhat^2 = c xhat, so the
    // spectrum takes values in {0, c}; normalization forces c = d/|D|.
    for (int d = 2; d <= 4; ++d) {
        auto sols = all_esystem_solutions(d);
        for (const auto& sol : sols) {
            GroupAlgebraElement x(d);
            x.c[0] = Cyclotomic(1);
            for (int s = 1; s < d; ++s) x.c[s] = sol.x[s - 1];
            GroupAlgebraElement xh = fourier(x);
            Cyclotomic expected(d, Rational(1, static_cast<long>(sol.D.size())));
            for (int m = 0; m < d; ++m) {
                bool in_D = std::find(sol.D.begin(), sol.D.end(), m) != sol.D.end();
                if (in_D)
                    CHECK(xh.c[m] == Cyclotomic(d, Rational(1, static_cast<long>(sol.D.size())) * Rational(d)));
                else
                    CHECK(xh.c[m].is_zero_elem());
            }
        }
    }
}

TEST_CASE("listing format") {
    ESystemSolution s = esystem_solution(2, {1});
    CHECK(s.str() == "D={1} x=(-1) E=1");
    ESystemSolution t = esystem_solution(2, {0, 1});
    CHECK(t.str() == "D={0,1} x=(0) E=1/2");
}
