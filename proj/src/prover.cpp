#include "mtp/prover.hpp"

#include "mtp/errors.hpp"
#include "mtp/parser.hpp"

#include <algorithm>

namespace mtp {

std::string to_string(ProofStatus s) {
    switch (s) {
        case ProofStatus::proven: return "proven";
        case ProofStatus::not_proven: return "not proven";
        case ProofStatus::disproven: return "disproven";
    }
    return "?";
}

MtpExpr prepare_expr(const std::string& text, const std::optional<std::string>& variable,
                     const std::optional<ParameterRange>& parameter) {
    ParseOptions opts;
    opts.variable = variable;
    if (parameter) opts.parameter = parameter->name;
    MtpExpr e = parse_expr(text, opts);
    if (parameter) {
        if (!(parameter->lo < parameter->hi))
            throw DomainError("parameter range must satisfy lo < hi, got " + parameter->lo.to_display() + ".." +
                              parameter->hi.to_display());
        e.param = Parameter{parameter->name, parameter->lo, parameter->hi};
    }
    return normalize(e);
}

std::vector<TermBounds> plan_bounds(const EstimationPlan& plan) {
    std::vector<TermBounds> out;
    const auto& terms = plan.khat_plan.transformed.terms;
    for (std::size_t i = 0; i < plan.per_term.size() && i < terms.size(); ++i)
        if (plan.per_term[i]) out.push_back({i, bounds_used(terms[i], *plan.per_term[i])});
    return out;
}

namespace {

bool is_parametric(const MtpExpr& e) {
    return e.param && std::any_of(e.terms.begin(), e.terms.end(), [](const MtpTerm& t) { return !t.alpha.is_constant(); });
}

std::optional<Counterexample> search_counterexample(const MtpExpr& e, const IntervalSpec& interval) {
    const ProxyInterval iv = interval.proxy();
    const Rational top = std::min(iv.upper, half_pi_lo());
    const bool include_top = top < iv.upper || iv.upper_closed;
    std::vector<std::optional<Rational>> params{std::nullopt};
    if (is_parametric(e)) {
        params.clear();
        for (int i = 1; i < 8; ++i) params.emplace_back(*e.param->lo + (*e.param->hi - *e.param->lo) * Rational(i, 8));
    }
    constexpr int kGrid = 64;
    for (int j = 1; j <= kGrid; ++j) {
        if (j == kGrid && !include_top) break;
        const Rational x = top * Rational(j, kGrid);
        for (const auto& a : params) {
            const ValueEnclosure v = enclose_value(e, x, a.value_or(Rational(0)));
            if (v.hi.sign() < 0) return Counterexample{x, a, v};
        }
    }
    return std::nullopt;
}

}  // namespace

TpEvidence tp_evidence(const AffinePoly& tp, const MtpExpr& e, const IntervalSpec& interval) {
    TpEvidence out;
    if (is_parametric(e)) {
        if (!e.param->has_range()) throw SignIndefiniteError("parametric expression needs a parameter range");
        LinearParamForm form{tp.slope, tp.constant, *e.param->lo, *e.param->hi};
        const LinearParamResult r = prove_linear_param(form, interval);
        out.holds = r.holds;
        out.evidence = {{"tp at " + e.param->name + " = " + form.a_lo.to_display(), r.at_lo},
                        {"tp at " + e.param->name + " = " + form.a_hi.to_display(), r.at_hi}};
        out.linear_form = std::move(form);
        out.linear_info = LinearParamInfo{r.endpoint_case, r.p_sign};
        return out;
    }
    if (tp.constant.is_zero()) return out;
    PositivityEvidence ev = positivity_evidence(tp.constant, interval.proxy(), PositivityMode::strict);
    out.holds = ev.holds;
    out.evidence = {{"tp", std::move(ev)}};
    return out;
}

ProveOutcome prove(const std::string& text, const IntervalSpec& interval, const ProveOptions& options) {
    interval.validate_for_prover();
    const MtpExpr e = prepare_expr(text, options.variable, options.parameter);

    ProveOutcome out;
    std::optional<EstimationPlan> plan;
    std::optional<AffinePoly> tp;
    if (options.pinned_plan) {
        EstimationPlan pinned{select_khat(e, interval, options.method), *options.pinned_plan};
        AffinePoly estimate = estimate_expr(pinned);
        plan = std::move(pinned);
        tp = std::move(estimate);
    } else {
        SearchResult sr = auto_search(e, interval, options.method, options.budget);
        out.attempts = std::move(sr.attempts);
        if (sr.plan) {
            plan = std::move(sr.plan);
            tp = std::move(sr.tp);
        } else {
            out.failure.rejected_tp = std::move(sr.rejected);
            out.failure.root = std::move(sr.root);
            out.failure.witness = std::move(sr.witness);
            out.failure.message = out.attempts.empty()
                                      ? "budget exhausted: k-hat = " + std::to_string(sr.khat_plan.khat) +
                                            " exceeds the index budget " + std::to_string(options.budget)
                                      : "no plan with indices up to " + std::to_string(options.budget) +
                                            " gives a positive TP";
        }
    }

    if (plan) {
        TpEvidence ev = tp_evidence(*tp, plan->khat_plan.transformed, interval);
        if (ev.holds) {
            ProofCertificate cert;
            cert.original_text = text;
            cert.variable = e.variable;
            cert.parameter = options.parameter;
            cert.method = options.method;
            cert.normalized = e;
            cert.interval = interval;
            cert.proxy = interval.proxy();
            cert.khat_plan = plan->khat_plan;
            cert.bounds = plan_bounds(*plan);
            cert.plan = std::move(*plan);
            cert.tp = std::move(*tp);
            cert.linear_form = std::move(ev.linear_form);
            cert.linear_info = std::move(ev.linear_info);
            cert.evidence = std::move(ev.evidence);
            out.status = ProofStatus::proven;
            out.certificate = std::move(cert);
            return out;
        }
        out.failure.message = "TP of the pinned plan is not positive on the interval";
        out.failure.rejected_tp = tp->constant;
    }

    out.failure.counterexample = search_counterexample(e, interval);
    out.status = out.failure.counterexample ? ProofStatus::disproven : ProofStatus::not_proven;
    return out;
}

}  // namespace mtp
