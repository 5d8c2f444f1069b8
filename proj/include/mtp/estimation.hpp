#pragma once

#include "mtp/expr.hpp"
#include "mtp/khat.hpp"
#include "mtp/sturm.hpp"
#include "mtp/taylor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mtp {

/// Step I (positive coefficient) or one of the three step II forms.
enum class Variant { I, II_i, II_ii, II_iii };

std::string to_string(Variant v);
Variant parse_variant(const std::string& text);

/// Degree indices of one addend: sine degree 4s+3 (step I) or 4s+1 (step II),
/// cosine degree 4k+2 (step I) or 4k (step II).
struct TermPlan {
    unsigned s = 0;
    unsigned k = 0;
    Variant variant = Variant::I;

    friend bool operator==(const TermPlan&, const TermPlan&) = default;
};

/// per_term is aligned with khat_plan.transformed.terms; pure polynomial
/// addends carry no plan.
struct EstimationPlan {
    KhatPlan khat_plan;
    std::vector<std::optional<TermPlan>> per_term;

    friend bool operator==(const EstimationPlan&, const EstimationPlan&) = default;
};

/// constant + slope * a with polynomial coefficients.
struct AffinePoly {
    Poly constant;
    Poly slope;

    Poly at(const Rational& a) const { return constant + slope * a; }
    bool is_constant() const { return slope.is_zero(); }
    AffinePoly& operator+=(const AffinePoly& rhs);
    friend bool operator==(const AffinePoly&, const AffinePoly&) = default;
};

/// The Taylor bounds a term plan substitutes, with the side they must bound from.
struct BoundUse {
    TrigFunction func;
    unsigned degree;
    Direction direction;
    unsigned power;

    friend bool operator==(const BoundUse&, const BoundUse&) = default;
};
std::vector<BoundUse> bounds_used(const MtpTerm& term, const TermPlan& plan);

/// Polynomial lower bound of a single addend on (0, pi/2).
///
/// Step I uses the downward bounds T(4s+3) for sine and T(4k+2) for cosine and
/// needs k >= khat whenever cosine occurs. Step II-iii uses the upward bounds
/// T(4s+1) and T(4k). II-i and II-ii are only lower bounds when the factor
/// they bound from the wrong side is absent (II-i: no sine and an odd cosine
/// power; II-ii: no cosine and an odd sine power); there they coincide with
/// II-iii, elsewhere they throw PlanError.
AffinePoly estimate_term(const MtpTerm& term, const TermPlan& plan, Sign sign, unsigned khat = 0);

/// Degree of the estimate the variant would produce (before any cancellation).
unsigned estimate_degree(const MtpTerm& term, const TermPlan& plan);

/// Sum of estimate_term over plan.khat_plan.transformed; pure polynomial terms
/// are copied exactly. Throws PlanError when the plan does not fit the terms.
AffinePoly estimate_expr(const EstimationPlan& plan);

/// One candidate tried by auto_search.
struct SearchAttempt {
    unsigned s = 0;
    unsigned k = 0;
    bool accepted = false;
    std::string reason;
};

struct SearchResult {
    KhatPlan khat_plan;
    std::optional<EstimationPlan> plan;
    std::optional<AffinePoly> tp;
    std::vector<SearchAttempt> attempts;
    /// For a failed search: the last rejected polynomial (for a parametric
    /// expression, the failing endpoint polynomial), the leftmost root in the
    /// interval and a rational w in the interval with TP(w) <= 0, when found.
    std::optional<Poly> rejected;
    std::optional<RationalInterval> root;
    std::optional<Rational> witness;
};

/// Uniform degree indices: one s for every sine-bearing term and one k for
/// every cosine-bearing term, with s in [0, budget] and k in [khat, budget],
/// ordered by (max(s, k), s + k, s). Returns the first plan whose TP is
/// positive on the interval (both parameter endpoints for a parametric
/// expression); plan stays empty when the budget runs out.
SearchResult auto_search(const MtpExpr& e, const IntervalSpec& interval,
                         MethodRequest request = MethodRequest::automatic, unsigned budget = 12);

/// Plan applying (s, k) to every trigonometric term of the transformed expression.
EstimationPlan uniform_plan(const KhatPlan& khat_plan, unsigned s, unsigned k);

}  // namespace mtp
