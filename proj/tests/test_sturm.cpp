#include "mtp/errors.hpp"
#include "mtp/sturm.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace mtp;

namespace {

Poly P(std::initializer_list<Rational> c) { return Poly(std::vector<Rational>(c)); }

const Rational kDelta(1551414, 1000000);

}  // namespace

TEST_SUITE("exact-arith") {

TEST_CASE("sturm_chain examples") {
    CHECK(sturm_chain(P({-2, 0, 1})) == std::vector<Poly>{P({-2, 0, 1}), P({0, 2}), Poly(Rational(2))});
    CHECK(sturm_chain(Poly(Rational(5))) == std::vector<Poly>{Poly(Rational(5))});
    CHECK(sturm_chain(P({2, -3, 1})) == std::vector<Poly>{P({2, -3, 1}), P({-3, 2}), Poly(Rational(1, 4))});
    CHECK_THROWS_WITH_AS(sturm_chain(Poly()), "sign undecidable for zero polynomial", ZeroPolynomialError);
}

TEST_CASE("chain of a square-free polynomial ends in a nonzero constant") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(-20, 20);
    for (int i = 0; i < 50; ++i) {
        std::vector<Rational> coeffs(7);
        for (auto& x : coeffs) x = Rational(c(rng));
        coeffs.back() = Rational(1 + std::abs(c(rng)));
        const auto chain = sturm_chain(Poly(coeffs));
        CHECK(chain.back().is_constant());
        CHECK(!chain.back().is_zero());
    }
}

TEST_CASE("count_roots examples") {
    CHECK(count_roots(P({-2, 0, 1}), IntervalSpec::half_open(Rational(1), Rational(2))) == 1);
    CHECK(count_roots(P({1, 0, 1}), IntervalSpec::half_open(Rational(-10), Rational(10))) == 0);
    CHECK(count_roots(fixtures::pade_left_q(), IntervalSpec::half_open(Rational(0), Rational(1552, 1000))) == 0);
    CHECK_THROWS_AS(count_roots(Poly(), IntervalSpec::half_open(Rational(0), Rational(1))), ZeroPolynomialError);
    // endpoint conventions: (1, 2] contains 2, (1, 2) does not
    CHECK(count_roots(P({-2, 1}), IntervalSpec::half_open(Rational(1), Rational(2))) == 1);
    CHECK(count_roots(P({-2, 1}), IntervalSpec::open(Rational(1), Rational(2))) == 0);
    CHECK(count_roots(P({-1, 1}), IntervalSpec::half_open(Rational(1), Rational(2))) == 0);
    // multiplicities collapse
    const Poly b = P({-1, 1});
    CHECK(count_roots(b * b * b * P({-3, 2}), IntervalSpec::half_open(Rational(0), Rational(5))) == 2);
}

TEST_CASE("count_roots agrees with known roots and a grid scan") {
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<int> root_index(-24, 24), nroots(0, 6), mult(1, 3), coin(0, 1), cq(1, 9);
    std::uniform_int_distribution<int> grid(-3000, 3000);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        // roots n/8 + 1/3000 never fall on the 1/1000 grid and are 1/8 apart
        std::set<int> idx;
        const int n = nroots(rng);
        while (static_cast<int>(idx.size()) < n) idx.insert(root_index(rng));
        Poly p(Rational(cq(rng)) * Rational(coin(rng) ? 1 : -1));
        std::vector<std::pair<Rational, int>> roots;
        std::size_t degree = 0;
        for (int i : idx) {
            const Rational r = Rational(i, 8) + Rational(1, 3000);
            int m = mult(rng);
            if (degree + m > 8) m = 1;
            if (degree + m > 8) break;
            for (int j = 0; j < m; ++j) p = p * P({-r, 1});
            roots.emplace_back(r, m);
            degree += m;
        }
        if (degree + 2 <= 8 && coin(rng)) p = p * P({cq(rng), 0, 1});
        if (p.is_constant()) p = p * P({cq(rng), 0, 1});

        int a = grid(rng), b = grid(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        const Rational lo(a, 1000), hi(b, 1000);
        const std::size_t got = count_roots(p, IntervalSpec::half_open(lo, hi));
        std::size_t expected = 0, odd = 0;
        for (const auto& [r, m] : roots)
            if (lo < r && r <= hi) {
                ++expected;
                odd += m % 2;
            }
        CHECK(got == expected);
        std::size_t flips = 0;
        int last = p(lo).sign();
        for (int g = a + 1; g <= b; ++g) {
            const int s = p(Rational(g, 1000)).sign();
            if (s != last) ++flips;
            last = s;
        }
        CHECK(flips == odd);
        ++checked;
    }
    CHECK(checked > 190);
}

TEST_CASE("is_positive_on examples") {
    const auto q = is_positive_on(fixtures::pade_left_q(), IntervalSpec::half_open(Rational(0), Rational(1552, 1000)));
    CHECK(q.holds);
    CHECK(q.root_count == 0);
    CHECK(!is_positive_on(P({-2, 0, 1}), IntervalSpec::half_open(Rational(0), Rational(2))).holds);
    CHECK(is_positive_on(fixtures::pade_right_r_printed(), IntervalSpec::to_half_pi()).holds);
    CHECK(is_positive_on(fixtures::pade_right_r_expanded(), IntervalSpec::to_half_pi()).holds);
    CHECK_THROWS_AS(is_positive_on(Poly(), IntervalSpec::to_half_pi()), ZeroPolynomialError);
}

TEST_CASE("endpoint handling of is_positive_on") {
    // vanishes at the closed end: fails; at the open end: fine
    CHECK(!is_positive_on(P({1, -1}), IntervalSpec::half_open(Rational(0), Rational(1))).holds);
    CHECK(is_positive_on(P({1, -1}), IntervalSpec::open(Rational(0), Rational(1))).holds);
    // vanishing at 0 to high order is allowed on (0, b]
    CHECK(is_positive_on(Poly::monomial(Rational(3), 7), IntervalSpec::half_open(Rational(0), Rational(1))).holds);
    const auto ev = is_positive_on(P({0, 0, 0, 2, -1}), IntervalSpec::half_open(Rational(0), Rational(1)));
    CHECK(ev.holds);
    CHECK(ev.x_power == 3);
    // negative right of 0
    CHECK(!is_positive_on(P({0, -1, 5}), IntervalSpec::half_open(Rational(0), Rational(1))).holds);
    // a double root inside breaks strict positivity but not nonnegativity
    const Poly dbl = P({Rational(-1, 2), 1}) * P({Rational(-1, 2), 1});
    CHECK(!is_positive_on(dbl, IntervalSpec::half_open(Rational(0), Rational(1))).holds);
    CHECK(is_nonnegative_on(dbl, IntervalSpec::half_open(Rational(0), Rational(1))).holds);
    CHECK(is_nonnegative_on(Poly(), IntervalSpec::half_open(Rational(0), Rational(1))).holds);
    CHECK(!is_nonnegative_on(P({Rational(-1, 2), 1}), IntervalSpec::half_open(Rational(0), Rational(1))).holds);
}

TEST_CASE("positivity verdicts hold at random samples") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-6, 6), sample(1, 100000);
    int positives = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Rational> coeffs(5);
        for (auto& x : coeffs) x = Rational(c(rng));
        coeffs[0] = Rational(1 + std::abs(c(rng)));
        const Poly p(coeffs);
        const auto iv = IntervalSpec::half_open(Rational(0), Rational(2));
        if (p.is_zero() || !is_positive_on(p, iv).holds) continue;
        ++positives;
        for (int i = 0; i < 100; ++i) CHECK(p(Rational(sample(rng), 50000)).sign() > 0);
    }
    CHECK(positives > 20);
}

TEST_CASE("isolate_root examples") {
    const auto r2 = isolate_root(P({1, 0, Rational(-1, 2)}), IntervalSpec::open(Rational(0), Rational(2)), Rational(1, 100));
    CHECK(r2 == RationalInterval{Rational(141, 100), Rational(142, 100)});
    const auto third = isolate_root(P({Rational(-1, 3), 1}), IntervalSpec::open(Rational(0), Rational(1)), Rational(1, 100));
    CHECK(third == RationalInterval{Rational(33, 100), Rational(34, 100)});
    const Poly g = P({4095, 0, -3675, 0, 962, 0, -59});
    const auto d = isolate_root(g, IntervalSpec::to_half_pi(), Rational(1, 10000));
    CHECK(d.width() <= Rational(1, 10000));
    CHECK(d.contains(Rational(1551413, 1000000)));
    CHECK(g(d.lo).sign() * g(d.hi).sign() < 0);
    CHECK_THROWS_AS(isolate_root(P({-2, 0, 1}), IntervalSpec::open(Rational(-2), Rational(2)), Rational(1, 10)),
                    NotUniquelyRootedError);
    CHECK_THROWS_WITH(isolate_root(P({1, 0, 1}), IntervalSpec::open(Rational(-2), Rational(2)), Rational(1, 10)),
                      doctest::Contains("not uniquely rooted"));
}

TEST_CASE("isolated root is the only root and lies inside the query interval") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> d(1, 999);
    for (int i = 0; i < 60; ++i) {
        const Rational r(d(rng), 1000);
        const Poly p = P({-r, 1}) * P({2, 0, 1}) * P({Rational(3, 2), 1});
        const auto iv = IntervalSpec::open(Rational(0), Rational(1));
        const auto enc = isolate_root(p, iv, Rational(1, 1024));
        CHECK(enc.contains(r));
        CHECK(enc.lo >= Rational(0));
        CHECK(enc.hi <= Rational(1));
        CHECK(enc.width() <= Rational(1, 1024));
        SturmSequence s(p);
        CHECK(s.count(enc.lo, enc.hi) + (s.vanishes_at(enc.lo) ? 1 : 0) == 1);
    }
    // root exactly on a bisection point
    const auto half = isolate_root(P({Rational(-1, 2), 1}), IntervalSpec::open(Rational(0), Rational(1)), Rational(1, 8));
    CHECK(half.contains(Rational(1, 2)));
}

TEST_CASE("isolate_roots lists roots left to right") {
    const Poly p = P({-1, 3}) * P({-2, 3}) * P({-5, 4});  // 1/3, 2/3, 5/4
    const auto roots = isolate_roots(p, IntervalSpec::half_open(Rational(0), Rational(2)), Rational(1, 100));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].contains(Rational(1, 3)));
    CHECK(roots[1].contains(Rational(2, 3)));
    CHECK(roots[2].contains(Rational(5, 4)));
}

}
