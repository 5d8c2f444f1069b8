#pragma once

#include "mtp/expr.hpp"
#include "mtp/interval.hpp"
#include "mtp/sturm.hpp"

#include <optional>
#include <string>

namespace mtp {

/// TP(t, a) = p(t) * a + q(t) for a in the open range (a_lo, a_hi).
struct LinearParamForm {
    Poly p;
    Poly q;
    Rational a_lo;
    Rational a_hi;

    Poly at(const Rational& a) const { return p * a + q; }
    friend bool operator==(const LinearParamForm&, const LinearParamForm&) = default;
};

/// Which endpoint polynomials had to be strictly positive.
enum class EndpointCase { strict_both, nonstrict_lo, nonstrict_hi };

std::string to_string(EndpointCase c);
EndpointCase parse_endpoint_case(const std::string& text);

struct LinearParamResult {
    bool holds = false;
    EndpointCase endpoint_case = EndpointCase::strict_both;
    PositivityEvidence at_lo;  // evidence for p * a_lo + q
    PositivityEvidence at_hi;  // evidence for p * a_hi + q
    /// Sign of p when p is one-signed on the interval (monotonicity in a).
    std::optional<Sign> p_sign;

    friend bool operator==(const LinearParamResult&, const LinearParamResult&) = default;
};

/// TP is affine in a, so on the open range its infimum is approached at an
/// endpoint: TP > 0 for all interior a follows from strict positivity at both
/// endpoints, or from nonnegativity at one and strict positivity at the other.
/// Tries those cases in that order; holds = false when none applies.
LinearParamResult prove_linear_param(const LinearParamForm& form, const IntervalSpec& t_interval);

/// Recomputes the evidence for a given case (used by certificate checking).
LinearParamResult linear_param_evidence(const LinearParamForm& form, const ProxyInterval& t_interval,
                                        EndpointCase endpoint_case);

}  // namespace mtp
