#pragma once

#include "mtp/rational.hpp"

#include <string>
#include <variant>

namespace mtp {

/// Rational enclosure of pi/2: half_pi_lo() < pi/2 < half_pi_hi().
Rational half_pi_lo();  // 157079632679/10^11
Rational half_pi_hi();  // 157079632680/10^11

struct HalfPi {
    friend bool operator==(HalfPi, HalfPi) = default;
};

/// An interval endpoint: an exact rational or the symbolic value pi/2.
class BoundaryValue {
public:
    BoundaryValue() = default;
    BoundaryValue(const Rational& value) : value_(value) {}
    BoundaryValue(HalfPi) : value_(HalfPi{}) {}

    static BoundaryValue half_pi() { return BoundaryValue(HalfPi{}); }

    bool is_half_pi() const { return std::holds_alternative<HalfPi>(value_); }
    /// The exact rational; throws DomainError for pi/2.
    const Rational& rational() const;
    /// Rational used for decisions: pi/2 maps to half_pi_hi().
    Rational proxy() const;

    /// "pi/2" or the "num/den" string.
    std::string to_string() const;
    static BoundaryValue parse(const std::string& text);

    friend bool operator==(const BoundaryValue&, const BoundaryValue&) = default;

private:
    std::variant<Rational, HalfPi> value_;
};

/// The rational interval decisions are actually made on.
struct ProxyInterval {
    Rational lower;     // always open
    Rational upper;
    bool upper_closed;
    bool uses_half_pi_proxy;

    friend bool operator==(const ProxyInterval&, const ProxyInterval&) = default;
};

/// Interval with an open lower end: (lower, upper] or (lower, upper).
struct IntervalSpec {
    Rational lower;
    BoundaryValue upper;
    bool upper_closed = true;

    static IntervalSpec half_open(const Rational& lower, const BoundaryValue& upper) { return {lower, upper, true}; }
    static IntervalSpec open(const Rational& lower, const BoundaryValue& upper) { return {lower, upper, false}; }
    /// (0, pi/2), decided on the superset (0, half_pi_hi()].
    static IntervalSpec to_half_pi() { return {Rational(0), BoundaryValue::half_pi(), false}; }

    /// Symbolic pi/2 becomes the closed proxy half_pi_hi().
    ProxyInterval proxy() const;
    /// Checks lower < upper; throws DomainError.
    void validate() const;
    /// Checks the prover's domain: lower == 0 and 0 < upper <= pi/2, the latter
    /// decided through the enclosure (rational uppers must be below half_pi_lo()).
    void validate_for_prover() const;

    std::string to_string() const;

    friend bool operator==(const IntervalSpec&, const IntervalSpec&) = default;
};

}  // namespace mtp
