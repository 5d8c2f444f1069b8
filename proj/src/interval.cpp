#include "mtp/interval.hpp"

#include "mtp/errors.hpp"

namespace mtp {

Rational half_pi_lo() { return Rational(mpz_class(157079632679L), mpz_class(100000000000L)); }
Rational half_pi_hi() { return Rational(mpz_class(157079632680L), mpz_class(100000000000L)); }

const Rational& BoundaryValue::rational() const {
    if (is_half_pi()) throw DomainError("boundary is pi/2, not a rational");
    return std::get<Rational>(value_);
}

Rational BoundaryValue::proxy() const { return is_half_pi() ? half_pi_hi() : std::get<Rational>(value_); }

std::string BoundaryValue::to_string() const { return is_half_pi() ? "pi/2" : std::get<Rational>(value_).to_string(); }

BoundaryValue BoundaryValue::parse(const std::string& text) {
    if (text == "pi/2") return half_pi();
    return Rational::parse(text);
}

ProxyInterval IntervalSpec::proxy() const {
    if (upper.is_half_pi()) return {lower, half_pi_hi(), true, true};
    return {lower, upper.rational(), upper_closed, false};
}

void IntervalSpec::validate() const {
    if (!(lower < upper.proxy())) throw DomainError("empty interval " + to_string());
}

void IntervalSpec::validate_for_prover() const {
    validate();
    if (!lower.is_zero()) throw DomainError("the lower end of the interval must be 0");
    if (!upper.is_half_pi() && upper.rational() > half_pi_lo())
        throw DomainError("upper end " + upper.to_string() + " is not certifiably below pi/2");
}

std::string IntervalSpec::to_string() const {
    return "(" + lower.to_display() + ", " + (upper.is_half_pi() ? std::string("pi/2") : upper.rational().to_display()) +
           (upper_closed ? "]" : ")");
}

}  // namespace mtp
