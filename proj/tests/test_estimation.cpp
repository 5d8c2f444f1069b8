#include "mtp/errors.hpp"
#include "mtp/estimation.hpp"
#include "mtp/parser.hpp"
#include "oracle.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <random>

using namespace mtp;

namespace {

MtpExpr expr(const std::string& text, std::optional<Parameter> param = std::nullopt) {
    MtpExpr e = parse_expr(text);
    if (param) e.param = param;
    return normalize(e);
}

const Parameter kYangParam{"a", Rational(1), Rational(3, 2)};
const char* kMortici = "x^3*cos(x) - sin(x)^3 + (1/15)*x^7";
const char* kPadeLeft = "cos(x)^2*(17*x^4 + 420*x^2 + 4095) + 59*x^6 - 962*x^4 + 3675*x^2 - 4095";
const char* kPadeRight = "163*x^4 - 780*x^2 + 945 - (13*x^4 + 165*x^2 + 945)*cos(x)^2";
const char* kYangD = "4*t*(1-a)*sin(t)^2 - 2*a*sin(t)*cos(t) + 2*t*a";

oracle::Bracket oracle_value(const MtpExpr& e, const Rational& x, const Rational& a) {
    const mpq_class xv = x.raw();
    const oracle::Bracket s = oracle::clamp_nonnegative(oracle::sin_bracket(xv));
    const oracle::Bracket c = oracle::clamp_nonnegative(oracle::cos_bracket(xv));
    oracle::Bracket total{0, 0};
    for (const auto& t : e.terms) {
        mpq_class base = 1;
        for (unsigned i = 0; i < t.p; ++i) base *= xv;
        const mpq_class lo = base * oracle::power(s, t.r).lo * oracle::power(c, t.q).lo;
        const mpq_class hi = base * oracle::power(s, t.r).hi * oracle::power(c, t.q).hi;
        const mpq_class alpha = t.alpha.at(a).raw();
        total.lo += sgn(alpha) >= 0 ? mpq_class(alpha * lo) : mpq_class(alpha * hi);
        total.hi += sgn(alpha) >= 0 ? mpq_class(alpha * hi) : mpq_class(alpha * lo);
    }
    return total;
}

}  // namespace

TEST_SUITE("estimation") {

TEST_CASE("estimate_term examples") {
    const MtpTerm cos2{{Rational(1), Rational(0)}, 0, 2, 0};
    const AffinePoly a = estimate_term(cos2, {0, 2, Variant::I}, Sign::positive, 1);
    CHECK(a.constant == taylor_cos(10).poly.pow(2));
    CHECK(a.slope.is_zero());

    const MtpTerm sc{{Rational(0), Rational(-2)}, 0, 1, 1};
    const AffinePoly b = estimate_term(sc, {1, 1, Variant::II_iii}, Sign::negative);
    CHECK(b.constant.is_zero());
    CHECK(b.slope == taylor_sin(5).poly * taylor_cos(4).poly * Rational(-2));

    const MtpTerm s2{{Rational(4), Rational(-4)}, 1, 0, 2};
    const AffinePoly c = estimate_term(s2, {1, 0, Variant::II_iii}, coefficient_sign(s2.alpha, kYangParam));
    const Poly base = Poly::x() * taylor_sin(5).poly.pow(2);
    CHECK(c.constant == base * Rational(4));
    CHECK(c.slope == base * Rational(-4));
}

TEST_CASE("estimate_term rejects inadmissible plans") {
    const MtpTerm pos{{Rational(1), Rational(0)}, 0, 2, 0};
    CHECK_THROWS_AS(estimate_term(pos, {0, 0, Variant::I}, Sign::positive, 1), PlanError);
    CHECK_THROWS_AS(estimate_term(pos, {0, 2, Variant::II_iii}, Sign::positive, 1), PlanError);
    const MtpTerm neg{{Rational(-1), Rational(0)}, 1, 1, 1};
    CHECK_THROWS_AS(estimate_term(neg, {0, 0, Variant::I}, Sign::negative), PlanError);
    CHECK_THROWS_AS(estimate_term(neg, {0, 0, Variant::II_i}, Sign::negative), PlanError);
    CHECK_THROWS_AS(estimate_term(neg, {0, 0, Variant::II_ii}, Sign::negative), PlanError);
    CHECK_THROWS_AS(estimate_term(pos, {0, 60, Variant::I}, Sign::positive), BudgetExhaustedError);
}

TEST_CASE("variants II-i and II-ii in the cases where they are lower bounds") {
    const MtpTerm cos3{{Rational(-2), Rational(0)}, 1, 3, 0};
    CHECK(estimate_term(cos3, {0, 1, Variant::II_i}, Sign::negative) ==
          estimate_term(cos3, {0, 1, Variant::II_iii}, Sign::negative));
    const MtpTerm sin1{{Rational(-2), Rational(0)}, 0, 0, 1};
    CHECK(estimate_term(sin1, {1, 0, Variant::II_ii}, Sign::negative) ==
          estimate_term(sin1, {1, 0, Variant::II_iii}, Sign::negative));
    CHECK_THROWS_AS(estimate_term({{Rational(-1), Rational(0)}, 0, 2, 0}, {0, 1, Variant::II_i}, Sign::negative),
                    PlanError);
    CHECK_THROWS_AS(estimate_term({{Rational(-1), Rational(0)}, 0, 0, 2}, {1, 0, Variant::II_ii}, Sign::negative),
                    PlanError);
}

TEST_CASE("II-iii gives the smallest degree") {
    std::mt19937 rng(61);
    std::uniform_int_distribution<unsigned> e(0, 6), idx(0, 5);
    for (int i = 0; i < 300; ++i) {
        const MtpTerm t{{Rational(-1), Rational(0)}, e(rng), e(rng), e(rng)};
        const unsigned s = idx(rng), k = idx(rng);
        const unsigned iii = estimate_degree(t, {s, k, Variant::II_iii});
        CHECK(iii <= estimate_degree(t, {s, k, Variant::II_i}));
        CHECK(iii <= estimate_degree(t, {s, k, Variant::II_ii}));
        if (!t.is_pure_polynomial())
            CHECK(estimate_term(t, {s, k, Variant::II_iii}, Sign::negative).constant.degree() == iii);
    }
}

TEST_CASE("estimate_expr examples") {
    const MtpExpr m = expr(kMortici);
    const EstimationPlan plan = uniform_plan(select_khat(m, IntervalSpec::to_half_pi()), 1, 1);
    CHECK(estimate_expr(plan).constant == fixtures::mortici_tp());

    const MtpExpr y = expr(kYangD, kYangParam);
    const AffinePoly tp = estimate_expr(uniform_plan(select_khat(y, IntervalSpec::to_half_pi()), 1, 1));
    CHECK(tp.slope == fixtures::yang_p());
    CHECK(tp.constant == fixtures::yang_q());

    const MtpExpr poly = expr("x^2 - x^3");
    const EstimationPlan pp = uniform_plan(select_khat(poly, IntervalSpec::to_half_pi()), 0, 0);
    CHECK(estimate_expr(pp).constant == Poly(std::vector<Rational>{0, 0, 1, -1}));

    EstimationPlan bad = plan;
    bad.per_term.pop_back();
    CHECK_THROWS_AS(estimate_expr(bad), PlanError);
    bad = plan;
    bad.per_term.back() = TermPlan{};
    CHECK_THROWS_AS(estimate_expr(bad), PlanError);
    bad = plan;
    bad.per_term.front().reset();
    CHECK_THROWS_AS(estimate_expr(bad), PlanError);
}

TEST_CASE("estimate_expr is linear over a shared plan") {
    std::mt19937 rng(67);
    std::uniform_int_distribution<int> cf(-9, 9), e(0, 4);
    for (int i = 0; i < 40; ++i) {
        MtpExpr a, b;
        for (int j = 0; j < 3; ++j) {
            a.terms.push_back({{Rational((cf(rng) & 7) | 1), Rational(0)}, 2u * e(rng), static_cast<unsigned>(e(rng) % 2),
                               static_cast<unsigned>(e(rng))});
            b.terms.push_back({{Rational((cf(rng) & 7) | 1), Rational(0)}, 2u * e(rng) + 1, static_cast<unsigned>(e(rng) % 2),
                               static_cast<unsigned>(e(rng))});
        }
        MtpExpr sum = a;
        sum.terms.insert(sum.terms.end(), b.terms.begin(), b.terms.end());
        const auto iv = IntervalSpec::to_half_pi();
        const MtpExpr na = normalize(a), nb = normalize(b), ns = normalize(sum);
        const AffinePoly ea = estimate_expr(uniform_plan(select_khat(na, iv), 1, 1));
        const AffinePoly eb = estimate_expr(uniform_plan(select_khat(nb, iv), 1, 1));
        const AffinePoly es = estimate_expr(uniform_plan(select_khat(ns, iv), 1, 1));
        CHECK(es.constant == ea.constant + eb.constant);
    }
}

TEST_CASE("refining a downward sine bound only raises it") {
    const auto iv = IntervalSpec::half_open(Rational(0), half_pi_hi());
    const MtpTerm t{{Rational(1), Rational(0)}, 0, 0, 1};
    for (unsigned s = 0; s <= 6; ++s) {
        const Poly lo = estimate_term(t, {s, 0, Variant::I}, Sign::positive).constant;
        const Poly hi = estimate_term(t, {s + 1, 0, Variant::I}, Sign::positive).constant;
        CHECK(is_positive_on(hi - lo, iv).holds);
    }
}

TEST_CASE("auto_search finds the expected plans") {
    const SearchResult m = auto_search(expr(kMortici), IntervalSpec::to_half_pi());
    REQUIRE(m.plan);
    CHECK(m.attempts.back().s == 1);
    CHECK(m.attempts.back().k == 1);
    CHECK(m.tp->constant == fixtures::mortici_tp());

    const auto delta = IntervalSpec::half_open(Rational(0), Rational(1551414, 1000000));
    const SearchResult left = auto_search(expr(kPadeLeft), delta);
    REQUIRE(left.plan);
    CHECK(left.khat_plan.khat == 1);
    REQUIRE(left.attempts.size() == 2);
    CHECK(left.attempts[0].k == 1);
    CHECK(!left.attempts[0].accepted);
    CHECK(left.attempts[1].k == 2);
    CHECK(left.attempts[1].accepted);
    CHECK(left.tp->constant == Poly::monomial(Rational(1, 13168189440000L), 12) * fixtures::pade_left_q());

    const SearchResult right = auto_search(expr(kPadeRight), IntervalSpec::to_half_pi());
    REQUIRE(right.plan);
    CHECK(right.tp->constant == Poly::monomial(Rational(1, 1625702400), 10) * fixtures::pade_right_r_expanded());

    const SearchResult yang = auto_search(expr(kYangD, kYangParam), IntervalSpec::to_half_pi());
    REQUIRE(yang.plan);
    CHECK(yang.tp->slope == fixtures::yang_p());
    CHECK(yang.tp->constant == fixtures::yang_q());
}

TEST_CASE("auto_search reports failures with a witness") {
    for (unsigned budget : {0u, 3u, 12u}) {
        const auto iv = IntervalSpec::half_open(Rational(0), Rational(1));
        const SearchResult r = auto_search(expr("sin(x) - x"), iv, MethodRequest::automatic, budget);
        CHECK(!r.plan);
        CHECK(r.attempts.size() == budget + 1);
        REQUIRE(r.rejected);
        REQUIRE(r.witness);
        CHECK(r.witness->sign() > 0);
        CHECK(*r.witness <= Rational(1));
        CHECK((*r.rejected)(*r.witness).sign() <= 0);
    }
    // a TP with a root in the interval yields a root enclosure next to a nonpositive point
    const SearchResult r = auto_search(expr("cos(x) - 1/2"), IntervalSpec::half_open(Rational(0), Rational(3, 2)),
                                       MethodRequest::automatic, 2);
    CHECK(!r.plan);
    REQUIRE(r.root);
    CHECK(r.root->lo < Rational(11, 10));
    CHECK(r.root->hi > Rational(1));
    REQUIRE(r.witness);
    CHECK((*r.rejected)(*r.witness).sign() <= 0);
}

TEST_CASE("accepted plans are admissible and dominated by f") {
    struct Case {
        MtpExpr e;
        IntervalSpec iv;
    };
    const std::vector<Case> cases{
        {expr(kMortici), IntervalSpec::to_half_pi()},
        {expr(kPadeLeft), IntervalSpec::half_open(Rational(0), Rational(1551414, 1000000))},
        {expr(kPadeRight), IntervalSpec::to_half_pi()},
        {expr(kYangD, kYangParam), IntervalSpec::to_half_pi()},
        {expr("x*cos(x)^3 + sin(x)^2 - (1/2)*x^2 + x^5"), IntervalSpec::to_half_pi()},
    };
    std::mt19937 rng(71);
    std::uniform_int_distribution<long> d(1, 100000);
    for (const auto& c : cases) {
        const SearchResult r = auto_search(c.e, c.iv);
        REQUIRE(r.plan);
        const MtpExpr& t = r.khat_plan.transformed;
        for (std::size_t i = 0; i < t.terms.size(); ++i) {
            const auto& tp = r.plan->per_term[i];
            if (tp && tp->variant == Variant::I && t.terms[i].q > 0) CHECK(tp->k >= r.khat_plan.khat);
        }
        const Rational top = std::min(c.iv.proxy().upper, half_pi_lo());
        for (int j = 0; j < 50; ++j) {
            const Rational x = top * Rational(d(rng), 100000);
            const Rational a = Rational(1) + Rational(d(rng), 200001);
            const Rational v = r.tp->at(a)(x);
            CHECK(v.raw() < oracle_value(c.e, x, a).lo);
        }
    }
}

TEST_CASE("auto_search is deterministic") {
    const SearchResult a = auto_search(expr(kPadeLeft), IntervalSpec::half_open(Rational(0), Rational(1551414, 1000000)));
    const SearchResult b = auto_search(expr(kPadeLeft), IntervalSpec::half_open(Rational(0), Rational(1551414, 1000000)));
    CHECK(a.plan == b.plan);
    CHECK(a.tp == b.tp);
}

}
