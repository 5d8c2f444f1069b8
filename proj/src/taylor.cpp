#include "mtp/taylor.hpp"

#include "mtp/errors.hpp"
#include "mtp/interval.hpp"
#include "mtp/sturm.hpp"

#include <algorithm>

namespace mtp {

namespace {

void check_degree(unsigned n) {
    if (n > kMaxTaylorDegree)
        throw BudgetExhaustedError("Taylor degree " + std::to_string(n) + " exceeds the cap of " +
                                   std::to_string(kMaxTaylorDegree));
}

// Coefficients (-1)^i / (first + 2i)! for powers first, first+2, ..., <= n.
Poly alternating_series(unsigned first, unsigned n) {
    std::vector<Rational> c(n + 1);
    mpz_class factorial = 1;
    for (unsigned j = 2; j <= first; ++j) factorial *= j;
    bool negative = false;
    for (unsigned power = first; power <= n; power += 2) {
        c[power] = Rational(mpz_class(negative ? -1 : 1), factorial);
        factorial *= (power + 1) * (power + 2);
        negative = !negative;
    }
    return Poly(std::move(c));
}

}  // namespace

TaylorBound taylor_sin(unsigned n) {
    if (n % 2 == 0) throw DomainError("sine Taylor degree must be odd, got " + std::to_string(n));
    check_degree(n);
    return {TrigFunction::sin, n, n % 4 == 1 ? Direction::upward : Direction::downward,
            static_cast<unsigned long>(n + 3) * (n + 4), alternating_series(1, n)};
}

TaylorBound taylor_cos(unsigned n) {
    if (n % 2 == 1) throw DomainError("cosine Taylor degree must be even, got " + std::to_string(n));
    check_degree(n);
    return {TrigFunction::cos, n, n % 4 == 0 ? Direction::upward : Direction::downward,
            static_cast<unsigned long>(n + 3) * (n + 4), alternating_series(0, n)};
}

bool covers_half_pi(const TaylorBound& bound) {
    const Rational hi = half_pi_hi();
    return Rational(bound.radius_squared) > hi * hi;
}

std::string to_string(TrigFunction f) { return f == TrigFunction::sin ? "sin" : "cos"; }
std::string to_string(Direction d) { return d == Direction::upward ? "upward" : "downward"; }

Rational default_root_eps() { return Rational::pow10(6).inverse(); }

RootEnclosure cos_root_ck(unsigned k, const Rational& eps) {
    if (eps.sign() <= 0) throw DomainError("enclosure width must be positive");
    const TaylorBound bound = cos_downward(k);
    RationalInterval r = isolate_root(bound.poly, IntervalSpec::open(Rational(0), half_pi_hi()), eps);
    return {k, r.lo, r.hi, RootKind::c_k, 0};
}

RootEnclosure cos_crossing_dk(unsigned k, unsigned m, const Rational& eps) {
    if (eps.sign() <= 0) throw DomainError("enclosure width must be positive");
    if (m % 4 != 0) throw DomainError("bracket degree m must be a multiple of 4");
    const Poly lower_cos = cos_downward(k).poly;
    const RootEnclosure c = cos_root_ck(k, eps / Rational(4));
    const IntervalSpec window = IntervalSpec::open(c.lo, half_pi_hi());
    const Rational quarter = eps / Rational(4);

    for (unsigned deg = std::max(m, 4 * k); deg + 2 <= kMaxTaylorDegree; deg += 4) {
        // T(deg+2) <= cos <= T(deg), so cos + lower_cos is squeezed between these.
        const Poly below = taylor_cos(deg + 2).poly + lower_cos;
        const Poly above = taylor_cos(deg).poly + lower_cos;
        if (below(c.lo).sign() <= 0 || above(half_pi_hi()).sign() >= 0) continue;
        if (count_roots(below, window) != 1 || count_roots(above, window) != 1) continue;
        const RationalInterval left = isolate_root(below, window, quarter);
        const RationalInterval right = isolate_root(above, window, quarter);
        const Rational lo = std::min(left.lo, right.lo);
        const Rational hi = std::max(left.hi, right.hi);
        if (hi - lo <= eps) return {k, lo, hi, RootKind::d_k, deg};
    }
    throw BudgetExhaustedError("d_" + std::to_string(k) + " enclosure needs a cosine bracket above degree " +
                               std::to_string(kMaxTaylorDegree));
}

TrigEnclosure enclose_sin(const Rational& x) {
    if (x.sign() < 0 || x > Rational(3)) throw DomainError("sin enclosure requires 0 <= x <= 3");
    static const Poly below = sin_downward(10).poly;
    static const Poly above = sin_upward(10).poly;
    return {below(x), above(x)};
}

TrigEnclosure enclose_cos(const Rational& x) {
    if (x.sign() < 0 || x > Rational(3)) throw DomainError("cos enclosure requires 0 <= x <= 3");
    static const Poly below = cos_downward(10).poly;
    static const Poly above = cos_upward(10).poly;
    return {below(x), above(x)};
}

}  // namespace mtp
