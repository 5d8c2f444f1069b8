#pragma once

#include "mtp/interval.hpp"
#include "mtp/poly.hpp"

#include <cstddef>
#include <vector>

namespace mtp {

/// Closed rational interval [lo, hi].
struct RationalInterval {
    Rational lo;
    Rational hi;
    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

/// Sturm sequence of the square-free part of a polynomial. Chain members are
/// stored as positive multiples of the textbook chain, which leaves every sign
/// variation count unchanged while keeping coefficients integral and small.
class SturmSequence {
public:
    /// Throws ZeroPolynomialError.
    explicit SturmSequence(const Poly& p);

    const Poly& square_free() const { return chain_.front(); }
    std::size_t length() const { return chain_.size(); }
    std::size_t variations(const Rational& x) const;
    /// Distinct real roots in (a, b], a < b.
    std::size_t count(const Rational& a, const Rational& b) const;
    bool vanishes_at(const Rational& x) const { return square_free()(x).is_zero(); }

private:
    std::vector<Poly> chain_;
};

/// Textbook chain p0 = sqf(p), p1 = p0', p(i+1) = -rem(p(i-1), p(i)).
std::vector<Poly> sturm_chain(const Poly& p);

/// Distinct roots inside the interval (symbolic pi/2 is decided at half_pi_hi()).
std::size_t count_roots(const Poly& p, const IntervalSpec& interval);

/// Closed enclosure of width <= eps around the single root in the interval.
/// When possible the enclosure is snapped to the grid eps*Z. Throws
/// NotUniquelyRootedError unless the interval holds exactly one root.
RationalInterval isolate_root(const Poly& p, const IntervalSpec& interval, const Rational& eps);

/// Enclosures of every distinct root in the interval, left to right.
std::vector<RationalInterval> isolate_roots(const Poly& p, const IntervalSpec& interval, const Rational& eps);

enum class PositivityMode { strict, nonstrict };

/// Exact evidence that p > 0 (or p >= 0) on an interval (lower, upper(]).
///
/// For lower >= 0 the factor x^x_power is split off first; the sign question
/// is then answered for g = p / x^x_power. In strict mode square_free is the
/// square-free part of g and root_count counts its distinct roots in the
/// interval. In nonstrict mode square_free is the odd-multiplicity part of g
/// and root_count counts its roots in the open interval, so zero roots there
/// means g never changes sign. Either way the sample fixes the sign.
struct PositivityEvidence {
    PositivityMode mode = PositivityMode::strict;
    Poly poly;
    Rational lower;
    Rational upper;
    bool upper_closed = true;
    std::size_t x_power = 0;
    Poly square_free;
    std::size_t chain_length = 0;
    std::size_t variations_lower = 0;
    std::size_t variations_upper = 0;
    std::size_t root_count = 0;
    Rational sample;
    Rational sample_value;
    Rational lower_value;
    Rational upper_value;
    bool holds = false;

    explicit operator bool() const { return holds; }
    friend bool operator==(const PositivityEvidence&, const PositivityEvidence&) = default;
};

PositivityEvidence positivity_evidence(const Poly& p, const ProxyInterval& interval, PositivityMode mode);

/// p > 0 on the interval; throws ZeroPolynomialError for p = 0.
PositivityEvidence is_positive_on(const Poly& p, const IntervalSpec& interval);
/// p >= 0 on the interval; the zero polynomial qualifies.
PositivityEvidence is_nonnegative_on(const Poly& p, const IntervalSpec& interval);

}  // namespace mtp
