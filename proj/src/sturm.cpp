#include "mtp/sturm.hpp"

#include "mtp/errors.hpp"

#include <algorithm>

namespace mtp {

namespace {

constexpr unsigned kMaxExtraBisections = 64;

std::vector<Poly> build_chain(const Poly& p, bool scaled) {
    if (p.is_zero()) throw ZeroPolynomialError();
    Poly first = square_free_part(p);
    std::vector<Poly> chain;
    chain.push_back(scaled ? first.primitive() * Rational(first.leading().sign()) : first);
    if (first.is_constant()) return chain;
    Poly second = chain.front().derivative();
    chain.push_back(scaled ? second.primitive() : second);
    while (!chain.back().is_constant()) {
        Poly next = -divmod(chain[chain.size() - 2], chain.back()).remainder;
        if (next.is_zero()) break;  // cannot happen for square-free input
        chain.push_back(scaled ? next.primitive() : next);
    }
    return chain;
}

// Largest b' in (a, b) of the form b - (b-a)/2^j with count(a, b'] == target.
Rational shrink_upper(const SturmSequence& seq, const Rational& a, const Rational& b, std::size_t target) {
    Rational step = (b - a) / Rational(2);
    for (;;) {
        Rational candidate = b - step;
        if (seq.count(a, candidate) == target && !seq.vanishes_at(candidate)) return candidate;
        step /= Rational(2);
    }
}

// Smallest a' in (a, b) of the form a + (b-a)/2^j with count(a', b] == target, a' not a root.
Rational raise_lower(const SturmSequence& seq, const Rational& a, const Rational& b, std::size_t target) {
    Rational step = (b - a) / Rational(2);
    for (;;) {
        Rational candidate = a + step;
        if (seq.count(candidate, b) == target && !seq.vanishes_at(candidate)) return candidate;
        step /= Rational(2);
    }
}

std::size_t count_in(const SturmSequence& seq, const ProxyInterval& iv) {
    std::size_t n = seq.count(iv.lower, iv.upper);
    if (!iv.upper_closed && seq.vanishes_at(iv.upper)) --n;
    return n;
}

// Narrows (a, b], known to hold exactly one root, to width <= eps, then tries
// to snap to a grid cell of eps*Z that stays inside [lower, upper].
RationalInterval refine_single(const SturmSequence& seq, Rational a, Rational b, const Rational& eps,
                               const ProxyInterval& bounds) {
    while (b - a > eps) {
        Rational m = midpoint(a, b);
        if (seq.count(a, m) == 1)
            b = m;
        else
            a = m;
    }
    for (unsigned extra = 0;; ++extra) {
        const Rational cell_lo = Rational((a / eps).floor(), mpz_class(1)) * eps;
        const Rational cell_hi = cell_lo + eps;
        if (b <= cell_hi) {
            bool inside = cell_lo >= bounds.lower && (cell_hi < bounds.upper || (bounds.upper_closed && cell_hi == bounds.upper));
            if (inside && !seq.vanishes_at(cell_lo) && seq.count(cell_lo, cell_hi) == 1) return {cell_lo, cell_hi};
            break;
        }
        if (extra >= kMaxExtraBisections) break;
        Rational m = midpoint(a, b);
        if (seq.count(a, m) == 1)
            b = m;
        else
            a = m;
    }
    return {a, b};
}

}  // namespace

SturmSequence::SturmSequence(const Poly& p) : chain_(build_chain(p, true)) {}

std::size_t SturmSequence::variations(const Rational& x) const {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& member : chain_) {
        int s = member(x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

std::size_t SturmSequence::count(const Rational& a, const Rational& b) const {
    if (!(a < b)) return 0;
    return variations(a) - variations(b);
}

std::vector<Poly> sturm_chain(const Poly& p) { return build_chain(p, false); }

std::size_t count_roots(const Poly& p, const IntervalSpec& interval) {
    interval.validate();
    SturmSequence seq(p);
    return count_in(seq, interval.proxy());
}

RationalInterval isolate_root(const Poly& p, const IntervalSpec& interval, const Rational& eps) {
    if (eps.sign() <= 0) throw DomainError("isolation width must be positive");
    interval.validate();
    SturmSequence seq(p);
    const ProxyInterval iv = interval.proxy();
    const std::size_t n = count_in(seq, iv);
    if (n != 1) throw NotUniquelyRootedError(n);
    Rational a = iv.lower;
    Rational b = iv.upper;
    // Keep the excluded endpoints out of the final closed enclosure.
    if (!iv.upper_closed) b = shrink_upper(seq, a, b, 1);
    if (seq.vanishes_at(a)) a = raise_lower(seq, a, b, 1);
    return refine_single(seq, a, b, eps, iv);
}

std::vector<RationalInterval> isolate_roots(const Poly& p, const IntervalSpec& interval, const Rational& eps) {
    if (eps.sign() <= 0) throw DomainError("isolation width must be positive");
    interval.validate();
    SturmSequence seq(p);
    const ProxyInterval iv = interval.proxy();
    Rational top = iv.upper;
    if (!iv.upper_closed && seq.vanishes_at(top)) top = shrink_upper(seq, iv.lower, top, seq.count(iv.lower, top) - 1);

    std::vector<RationalInterval> out;
    struct Cell {
        Rational a, b;
        std::size_t n;
    };
    std::vector<Cell> stack{{iv.lower, top, seq.count(iv.lower, top)}};
    while (!stack.empty()) {
        Cell cell = stack.back();
        stack.pop_back();
        if (cell.n == 0) continue;
        if (cell.n == 1) {
            Rational a = cell.a;
            if (seq.vanishes_at(a)) a = raise_lower(seq, a, cell.b, 1);
            out.push_back(refine_single(seq, a, cell.b, eps, {cell.a, cell.b, true, false}));
            continue;
        }
        Rational m = midpoint(cell.a, cell.b);
        std::size_t left = seq.count(cell.a, m);
        stack.push_back({m, cell.b, cell.n - left});
        stack.push_back({cell.a, m, left});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
    return out;
}

PositivityEvidence positivity_evidence(const Poly& p, const ProxyInterval& iv, PositivityMode mode) {
    if (!(iv.lower < iv.upper)) throw DomainError("empty interval");
    PositivityEvidence ev;
    ev.mode = mode;
    ev.poly = p;
    ev.lower = iv.lower;
    ev.upper = iv.upper;
    ev.upper_closed = iv.upper_closed;
    ev.lower_value = p(iv.lower);
    ev.upper_value = p(iv.upper);
    if (p.is_zero()) {
        if (mode == PositivityMode::strict) throw ZeroPolynomialError();
        ev.sample = midpoint(iv.lower, iv.upper);
        ev.holds = true;
        return ev;
    }

    ev.x_power = iv.lower.sign() >= 0 ? p.valuation() : 0;
    const Poly g = p.divide_by_x_power(ev.x_power);
    ev.square_free = mode == PositivityMode::strict ? square_free_part(g) : odd_multiplicity_part(g);
    SturmSequence seq(ev.square_free);
    ev.chain_length = seq.length();
    ev.variations_lower = seq.variations(iv.lower);
    ev.variations_upper = seq.variations(iv.upper);
    ev.root_count = ev.variations_lower - ev.variations_upper;
    const bool drop_upper = mode == PositivityMode::nonstrict || !iv.upper_closed;
    if (drop_upper && seq.vanishes_at(iv.upper)) --ev.root_count;

    // Interior sample where g does not vanish: lower + (upper-lower)*j/n.
    ev.sample = midpoint(iv.lower, iv.upper);
    for (unsigned n = 3; g(ev.sample).is_zero(); ++n) {
        for (unsigned j = 1; j < n; ++j) {
            ev.sample = iv.lower + (iv.upper - iv.lower) * Rational(static_cast<long>(j), static_cast<long>(n));
            if (!g(ev.sample).is_zero()) break;
        }
    }
    ev.sample_value = p(ev.sample);
    ev.holds = ev.root_count == 0 && ev.sample_value.sign() > 0;
    return ev;
}

PositivityEvidence is_positive_on(const Poly& p, const IntervalSpec& interval) {
    interval.validate();
    return positivity_evidence(p, interval.proxy(), PositivityMode::strict);
}

PositivityEvidence is_nonnegative_on(const Poly& p, const IntervalSpec& interval) {
    interval.validate();
    return positivity_evidence(p, interval.proxy(), PositivityMode::nonstrict);
}

}  // namespace mtp
