#pragma once

#include "mtp/expr.hpp"
#include "mtp/interval.hpp"

#include <string>

namespace mtp {

enum class KhatMethod { none_odd_only, small_delta, method_c, method_d };
enum class MethodRequest { automatic, method_c, method_d };

std::string to_string(KhatMethod m);
std::string to_string(MethodRequest m);
KhatMethod parse_khat_method(const std::string& text);
MethodRequest parse_method_request(const std::string& text);

/// Outcome of step 1: the smallest admissible cosine index for step I terms
/// and the expression estimation works on (rewritten only by method D).
struct KhatPlan {
    unsigned khat = 0;
    KhatMethod method = KhatMethod::none_odd_only;
    MtpExpr transformed;

    friend bool operator==(const KhatPlan&, const KhatPlan&) = default;
};

/// Smallest k with T_{4k+2}^cos(delta) >= 0. Requires 0 < delta < half_pi_hi();
/// throws DomainError otherwise and BudgetExhaustedError past the degree cap.
unsigned khat_method_c(const Rational& delta);

/// Even cosine powers only constrain k-hat in terms with a positive
/// coefficient: the upward bounds used for negative terms stay above cos x
/// (and hence above 0) on the whole interval, so any power of them is valid.
/// If no such term exists, or delta^2 <= 2, k-hat is 0. Otherwise a rational
/// delta uses method C unless method D is requested, and pi/2 forces method D.
/// Throws PlanError for method C with delta = pi/2.
KhatPlan select_khat(const MtpExpr& e, const IntervalSpec& interval, MethodRequest request = MethodRequest::automatic);

}  // namespace mtp
