#pragma once

#include "mtp/estimation.hpp"
#include "mtp/expr.hpp"
#include "mtp/interval.hpp"
#include "mtp/khat.hpp"
#include "mtp/linear_param.hpp"
#include "mtp/sturm.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mtp {

struct ParameterRange {
    std::string name;
    Rational lo;
    Rational hi;

    friend bool operator==(const ParameterRange&, const ParameterRange&) = default;
};

struct ProveOptions {
    MethodRequest method = MethodRequest::automatic;
    unsigned budget = 12;
    /// Skips the search; aligned with the terms after the k-hat step.
    std::optional<std::vector<std::optional<TermPlan>>> pinned_plan;
    std::optional<ParameterRange> parameter;
    std::optional<std::string> variable;
};

struct LabeledEvidence {
    std::string label;
    PositivityEvidence evidence;

    friend bool operator==(const LabeledEvidence&, const LabeledEvidence&) = default;
};

struct LinearParamInfo {
    EndpointCase endpoint_case = EndpointCase::strict_both;
    std::optional<Sign> p_sign;

    friend bool operator==(const LinearParamInfo&, const LinearParamInfo&) = default;
};

struct TermBounds {
    std::size_t term = 0;
    std::vector<BoundUse> bounds;

    friend bool operator==(const TermBounds&, const TermBounds&) = default;
};

/// Everything needed to re-check a proof from scratch.
struct ProofCertificate {
    std::string original_text;
    std::string variable;
    std::optional<ParameterRange> parameter;
    MethodRequest method = MethodRequest::automatic;
    MtpExpr normalized;
    IntervalSpec interval;
    ProxyInterval proxy;
    KhatPlan khat_plan;
    EstimationPlan plan;
    std::vector<TermBounds> bounds;
    /// TP = constant + slope * a; slope is zero without a parameter.
    AffinePoly tp;
    std::optional<LinearParamForm> linear_form;
    std::optional<LinearParamInfo> linear_info;
    std::vector<LabeledEvidence> evidence;
    std::string conclusion = "proven";
};

enum class ProofStatus { proven, not_proven, disproven };
std::string to_string(ProofStatus s);

/// A point where f itself is certainly negative.
struct Counterexample {
    Rational x;
    std::optional<Rational> a;
    ValueEnclosure value;
};

struct FailureReport {
    std::string message;
    std::optional<Poly> rejected_tp;
    std::optional<RationalInterval> root;
    std::optional<Rational> witness;
    std::optional<Counterexample> counterexample;
};

struct ProveOutcome {
    ProofStatus status = ProofStatus::not_proven;
    std::optional<ProofCertificate> certificate;
    FailureReport failure;
    std::vector<SearchAttempt> attempts;
};

/// Parses text, normalizes, picks k-hat, searches (or applies the pinned plan)
/// and checks TP > 0 on the interval, for all parameter values when present.
/// Failure yields not_proven, or disproven when a certified negative value of
/// f is found on a sample grid. Parse, zero-expression, sign and domain
/// errors propagate as exceptions.
ProveOutcome prove(const std::string& text, const IntervalSpec& interval, const ProveOptions& options = {});

/// Parse, attach the parameter range and normalize, as prove does.
MtpExpr prepare_expr(const std::string& text, const std::optional<std::string>& variable,
                     const std::optional<ParameterRange>& parameter);

/// Bounds substituted by each planned term of the transformed expression.
std::vector<TermBounds> plan_bounds(const EstimationPlan& plan);

/// Positivity evidence for TP exactly as prove produces it.
struct TpEvidence {
    bool holds = false;
    std::vector<LabeledEvidence> evidence;
    std::optional<LinearParamForm> linear_form;
    std::optional<LinearParamInfo> linear_info;
};
TpEvidence tp_evidence(const AffinePoly& tp, const MtpExpr& e, const IntervalSpec& interval);

}  // namespace mtp
