#include "mtp/khat.hpp"

#include "mtp/errors.hpp"
#include "mtp/taylor.hpp"

#include <algorithm>

namespace mtp {

std::string to_string(KhatMethod m) {
    switch (m) {
        case KhatMethod::none_odd_only: return "none-odd-only";
        case KhatMethod::small_delta: return "small-delta";
        case KhatMethod::method_c: return "method-c";
        case KhatMethod::method_d: return "method-d";
    }
    return "?";
}

std::string to_string(MethodRequest m) {
    switch (m) {
        case MethodRequest::automatic: return "auto";
        case MethodRequest::method_c: return "method-c";
        case MethodRequest::method_d: return "method-d";
    }
    return "?";
}

KhatMethod parse_khat_method(const std::string& text) {
    for (auto m : {KhatMethod::none_odd_only, KhatMethod::small_delta, KhatMethod::method_c, KhatMethod::method_d})
        if (to_string(m) == text) return m;
    throw DomainError("unknown k-hat method '" + text + "'");
}

MethodRequest parse_method_request(const std::string& text) {
    for (auto m : {MethodRequest::automatic, MethodRequest::method_c, MethodRequest::method_d})
        if (to_string(m) == text) return m;
    throw DomainError("unknown method '" + text + "' (expected auto, method-c or method-d)");
}

unsigned khat_method_c(const Rational& delta) {
    if (delta.sign() <= 0 || delta >= half_pi_hi())
        throw DomainError("method C needs 0 < delta < pi/2, got " + delta.to_display());
    for (unsigned k = 0; 4 * k + 2 <= kMaxTaylorDegree; ++k)
        if (poly_eval(cos_downward(k).poly, delta).sign() >= 0) return k;
    throw BudgetExhaustedError("method C found no admissible k up to the degree cap for delta = " +
                               delta.to_display());
}

KhatPlan select_khat(const MtpExpr& e, const IntervalSpec& interval, MethodRequest request) {
    const bool constrained = std::any_of(e.terms.begin(), e.terms.end(), [&](const MtpTerm& t) {
        return t.q > 0 && t.q % 2 == 0 && coefficient_sign(t.alpha, e.param) == Sign::positive;
    });
    if (!constrained) return {0, KhatMethod::none_odd_only, e};
    if (!interval.upper.is_half_pi()) {
        const Rational& delta = interval.upper.rational();
        if (delta * delta <= Rational(2)) return {0, KhatMethod::small_delta, e};
        if (request == MethodRequest::method_d) return {0, KhatMethod::method_d, eliminate_even_cos(e)};
        return {khat_method_c(delta), KhatMethod::method_c, e};
    }
    if (request == MethodRequest::method_c) throw PlanError("Method C requires δ < π/2");
    return {0, KhatMethod::method_d, eliminate_even_cos(e)};
}

}  // namespace mtp
