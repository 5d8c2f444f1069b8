#include "mtp/linear_param.hpp"

#include "mtp/errors.hpp"

namespace mtp {

std::string to_string(EndpointCase c) {
    switch (c) {
        case EndpointCase::strict_both: return "strict-both";
        case EndpointCase::nonstrict_lo: return "nonstrict-lo";
        case EndpointCase::nonstrict_hi: return "nonstrict-hi";
    }
    return "?";
}

EndpointCase parse_endpoint_case(const std::string& text) {
    for (auto c : {EndpointCase::strict_both, EndpointCase::nonstrict_lo, EndpointCase::nonstrict_hi})
        if (to_string(c) == text) return c;
    throw DomainError("unknown endpoint case '" + text + "'");
}

namespace {

PositivityEvidence evidence(const Poly& p, const ProxyInterval& interval, PositivityMode mode) {
    if (p.is_zero() && mode == PositivityMode::strict) {
        PositivityEvidence ev;
        ev.mode = mode;
        ev.lower = interval.lower;
        ev.upper = interval.upper;
        ev.upper_closed = interval.upper_closed;
        return ev;
    }
    return positivity_evidence(p, interval, mode);
}

std::optional<Sign> one_sided_sign(const Poly& p, const ProxyInterval& interval) {
    if (p.is_zero()) return std::nullopt;
    if (positivity_evidence(p, interval, PositivityMode::strict).holds) return Sign::positive;
    if (positivity_evidence(-p, interval, PositivityMode::strict).holds) return Sign::negative;
    return std::nullopt;
}

}  // namespace

LinearParamResult linear_param_evidence(const LinearParamForm& form, const ProxyInterval& t_interval,
                                        EndpointCase endpoint_case) {
    if (!(form.a_lo < form.a_hi)) throw DomainError("parameter range must satisfy a_lo < a_hi");
    LinearParamResult out;
    out.endpoint_case = endpoint_case;
    const auto lo_mode = endpoint_case == EndpointCase::nonstrict_lo ? PositivityMode::nonstrict : PositivityMode::strict;
    const auto hi_mode = endpoint_case == EndpointCase::nonstrict_hi ? PositivityMode::nonstrict : PositivityMode::strict;
    out.at_lo = evidence(form.at(form.a_lo), t_interval, lo_mode);
    out.at_hi = evidence(form.at(form.a_hi), t_interval, hi_mode);
    out.holds = out.at_lo.holds && out.at_hi.holds;
    out.p_sign = one_sided_sign(form.p, t_interval);
    return out;
}

LinearParamResult prove_linear_param(const LinearParamForm& form, const IntervalSpec& t_interval) {
    t_interval.validate();
    const ProxyInterval proxy = t_interval.proxy();
    LinearParamResult first;
    for (auto c : {EndpointCase::strict_both, EndpointCase::nonstrict_lo, EndpointCase::nonstrict_hi}) {
        LinearParamResult r = linear_param_evidence(form, proxy, c);
        if (r.holds) return r;
        if (c == EndpointCase::strict_both) first = std::move(r);
    }
    return first;
}

}  // namespace mtp
