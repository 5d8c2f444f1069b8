#include "mtp/estimation.hpp"

#include "mtp/errors.hpp"
#include "mtp/linear_param.hpp"

#include <algorithm>
#include <tuple>

namespace mtp {

std::string to_string(Variant v) {
    switch (v) {
        case Variant::I: return "I";
        case Variant::II_i: return "II-i";
        case Variant::II_ii: return "II-ii";
        case Variant::II_iii: return "II-iii";
    }
    return "?";
}

Variant parse_variant(const std::string& text) {
    for (auto v : {Variant::I, Variant::II_i, Variant::II_ii, Variant::II_iii})
        if (to_string(v) == text) return v;
    throw DomainError("unknown variant '" + text + "'");
}

AffinePoly& AffinePoly::operator+=(const AffinePoly& rhs) {
    constant += rhs.constant;
    slope += rhs.slope;
    return *this;
}

namespace {

unsigned sin_degree(const TermPlan& plan) { return plan.variant == Variant::I ? 4 * plan.s + 3 : 4 * plan.s + 1; }
unsigned cos_degree(const TermPlan& plan) { return plan.variant == Variant::I ? 4 * plan.k + 2 : 4 * plan.k; }

void check_variant(const MtpTerm& term, const TermPlan& plan, Sign sign, unsigned khat) {
    if (sign == Sign::positive) {
        if (plan.variant != Variant::I) throw PlanError("positive term needs variant I, got " + to_string(plan.variant));
        if (term.q > 0 && plan.k < khat)
            throw PlanError("step I cosine index k = " + std::to_string(plan.k) + " is below k-hat = " +
                            std::to_string(khat));
        return;
    }
    switch (plan.variant) {
        case Variant::I: throw PlanError("negative term cannot use variant I");
        case Variant::II_i:
            if (term.r != 0 || term.q % 2 == 0)
                throw PlanError("variant II-i is a lower bound only without sine and with an odd cosine power");
            return;
        case Variant::II_ii:
            if (term.q != 0 || term.r % 2 == 0)
                throw PlanError("variant II-ii is a lower bound only without cosine and with an odd sine power");
            return;
        case Variant::II_iii: return;
    }
}

}  // namespace

std::vector<BoundUse> bounds_used(const MtpTerm& term, const TermPlan& plan) {
    const Direction dir = plan.variant == Variant::I ? Direction::downward : Direction::upward;
    std::vector<BoundUse> out;
    if (term.r > 0) out.push_back({TrigFunction::sin, sin_degree(plan), dir, term.r});
    if (term.q > 0) out.push_back({TrigFunction::cos, cos_degree(plan), dir, term.q});
    return out;
}

AffinePoly estimate_term(const MtpTerm& term, const TermPlan& plan, Sign sign, unsigned khat) {
    Poly product = Poly::monomial(Rational(1), term.p);
    if (!term.is_pure_polynomial()) {
        check_variant(term, plan, sign, khat);
        for (const BoundUse& b : bounds_used(term, plan)) {
            const TaylorBound bound = b.func == TrigFunction::sin ? taylor_sin(b.degree) : taylor_cos(b.degree);
            product = product * bound.poly.pow(b.power);
        }
    }
    return {product * term.alpha.constant, product * term.alpha.slope};
}

unsigned estimate_degree(const MtpTerm& term, const TermPlan& plan) {
    if (term.is_pure_polynomial()) return term.p;
    switch (plan.variant) {
        case Variant::I: return term.p + (4 * plan.s + 3) * term.r + (4 * plan.k + 2) * term.q;
        case Variant::II_i: return term.p + (4 * plan.s + 3) * term.r + 4 * plan.k * term.q;
        case Variant::II_ii: return term.p + (4 * plan.s + 1) * term.r + (4 * plan.k + 2) * term.q;
        case Variant::II_iii: return term.p + (4 * plan.s + 1) * term.r + 4 * plan.k * term.q;
    }
    return 0;
}

AffinePoly estimate_expr(const EstimationPlan& plan) {
    const MtpExpr& e = plan.khat_plan.transformed;
    if (plan.per_term.size() != e.terms.size())
        throw PlanError("plan has " + std::to_string(plan.per_term.size()) + " entries for " +
                        std::to_string(e.terms.size()) + " terms");
    AffinePoly total;
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        const MtpTerm& t = e.terms[i];
        const auto& tp = plan.per_term[i];
        if (t.is_pure_polynomial()) {
            if (tp) throw PlanError("pure polynomial term " + std::to_string(i) + " must not carry a plan");
            total += estimate_term(t, TermPlan{}, Sign::positive);
            continue;
        }
        if (!tp) throw PlanError("trigonometric term " + std::to_string(i) + " has no plan");
        total += estimate_term(t, *tp, coefficient_sign(t.alpha, e.param), plan.khat_plan.khat);
    }
    return total;
}

EstimationPlan uniform_plan(const KhatPlan& khat_plan, unsigned s, unsigned k) {
    EstimationPlan plan{khat_plan, {}};
    const MtpExpr& e = khat_plan.transformed;
    for (const MtpTerm& t : e.terms) {
        if (t.is_pure_polynomial()) {
            plan.per_term.emplace_back(std::nullopt);
            continue;
        }
        const Sign sign = coefficient_sign(t.alpha, e.param);
        plan.per_term.emplace_back(TermPlan{s, k, sign == Sign::positive ? Variant::I : Variant::II_iii});
    }
    return plan;
}

namespace {

struct Check {
    bool ok = false;
    std::string reason;
    Poly failing;
    std::optional<Rational> witness;
};

// Cheap necessary conditions: positive lowest-order coefficient and positive
// values on a coarse grid. strict = reject on zero values as well.
std::optional<std::string> prefilter(const Poly& p, const ProxyInterval& iv, bool strict,
                                     std::optional<Rational>& witness) {
    if (p.is_zero()) return strict ? std::optional<std::string>("TP is identically zero") : std::nullopt;
    if (p.coeff(p.valuation()).sign() < 0) return "TP < 0 near 0 (negative lowest-order coefficient)";
    constexpr int kGrid = 16;
    for (int j = 1; j <= kGrid; ++j) {
        if (j == kGrid && !iv.upper_closed) break;
        const Rational x = iv.lower + (iv.upper - iv.lower) * Rational(j, kGrid);
        const int s = p(x).sign();
        if (s < 0 || (strict && s == 0)) {
            witness = x;
            return "TP(" + x.to_display() + ") " + (s < 0 ? "< 0" : "= 0");
        }
    }
    return std::nullopt;
}

std::string root_reason(const PositivityEvidence& ev) {
    if (ev.root_count > 0) return std::to_string(ev.root_count) + " root(s) of TP in the interval";
    return "TP not positive at the sample " + ev.sample.to_display();
}

Check check_plain(const Poly& p, const ProxyInterval& iv) {
    Check c;
    c.failing = p;
    if (auto why = prefilter(p, iv, true, c.witness)) {
        c.reason = *why;
        return c;
    }
    const PositivityEvidence ev = positivity_evidence(p, iv, PositivityMode::strict);
    c.ok = ev.holds;
    c.reason = c.ok ? "accepted" : root_reason(ev);
    return c;
}

Check check_param(const AffinePoly& tp, const Parameter& param, const IntervalSpec& interval) {
    const ProxyInterval iv = interval.proxy();
    const LinearParamForm form{tp.slope, tp.constant, *param.lo, *param.hi};
    Check c;
    for (const Rational& a : {*param.lo, *param.hi}) {
        const Poly endpoint = form.at(a);
        if (auto why = prefilter(endpoint, iv, false, c.witness)) {
            c.failing = endpoint;
            c.reason = "at " + param.name + " = " + a.to_display() + ": " + *why;
            return c;
        }
    }
    const LinearParamResult r = prove_linear_param(form, interval);
    c.ok = r.holds;
    if (c.ok) {
        c.reason = "accepted (" + to_string(r.endpoint_case) + ")";
        return c;
    }
    const bool lo_fails = !r.at_lo.holds;
    c.failing = form.at(lo_fails ? form.a_lo : form.a_hi);
    c.reason = "at " + param.name + " = " + (lo_fails ? form.a_lo : form.a_hi).to_display() + ": " +
               root_reason(lo_fails ? r.at_lo : r.at_hi);
    return c;
}

std::optional<Rational> find_witness(const Poly& p, const ProxyInterval& iv,
                                     const std::vector<RationalInterval>& roots) {
    std::vector<Rational> candidates;
    Rational prev = iv.lower;
    for (const auto& r : roots) {
        candidates.push_back(midpoint(prev, r.lo));
        candidates.push_back(r.lo);
        candidates.push_back(r.hi);
        prev = r.hi;
    }
    candidates.push_back(midpoint(prev, iv.upper));
    if (iv.upper_closed) candidates.push_back(iv.upper);
    for (const Rational& w : candidates) {
        const bool inside = w > iv.lower && (iv.upper_closed ? w <= iv.upper : w < iv.upper);
        if (inside && p(w).sign() <= 0) return w;
    }
    return std::nullopt;
}

}  // namespace

SearchResult auto_search(const MtpExpr& e, const IntervalSpec& interval, MethodRequest request, unsigned budget) {
    interval.validate();
    SearchResult result;
    result.khat_plan = select_khat(e, interval, request);
    const MtpExpr& t = result.khat_plan.transformed;
    const unsigned khat = result.khat_plan.khat;
    const bool uses_sin = std::any_of(t.terms.begin(), t.terms.end(), [](const MtpTerm& m) { return m.r > 0; });
    const bool uses_cos = std::any_of(t.terms.begin(), t.terms.end(), [](const MtpTerm& m) { return m.q > 0; });
    const bool parametric = t.param && std::any_of(t.terms.begin(), t.terms.end(),
                                                   [](const MtpTerm& m) { return !m.alpha.is_constant(); });
    if (parametric && !t.param->has_range()) throw SignIndefiniteError("parametric expression needs a parameter range");

    std::vector<std::pair<unsigned, unsigned>> candidates;
    for (unsigned s = 0; s <= (uses_sin ? budget : 0); ++s)
        for (unsigned k = uses_cos ? khat : 0; k <= (uses_cos ? std::max(budget, khat) : 0); ++k)
            if (!uses_cos || k <= budget) candidates.emplace_back(s, k);
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        return std::make_tuple(std::max(a.first, a.second), a.first + a.second, a.first) <
               std::make_tuple(std::max(b.first, b.second), b.first + b.second, b.first);
    });

    const ProxyInterval iv = interval.proxy();
    Check last;
    for (const auto& [s, k] : candidates) {
        EstimationPlan plan = uniform_plan(result.khat_plan, s, k);
        AffinePoly tp;
        try {
            tp = estimate_expr(plan);
        } catch (const BudgetExhaustedError& ex) {
            result.attempts.push_back({s, k, false, ex.what()});
            continue;
        }
        last = parametric ? check_param(tp, *t.param, interval) : check_plain(tp.constant, iv);
        result.attempts.push_back({s, k, last.ok, last.reason});
        if (last.ok) {
            result.plan = std::move(plan);
            result.tp = std::move(tp);
            return result;
        }
    }
    if (result.attempts.empty()) return result;
    result.rejected = last.failing;
    if (!last.failing.is_zero()) {
        const auto roots = isolate_roots(last.failing, interval, default_root_eps());
        if (!roots.empty()) result.root = roots.front();
        result.witness = last.witness ? last.witness : find_witness(last.failing, iv, roots);
    }
    return result;
}

}  // namespace mtp
