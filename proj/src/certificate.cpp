#include "mtp/certificate.hpp"

#include "mtp/errors.hpp"
#include "mtp/taylor.hpp"

#include <json.hpp>

namespace mtp {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& what) { throw DomainError("malformed certificate: " + what); }

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) malformed(std::string("missing field '") + name + "'");
    return j.at(name);
}

std::string get_string(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_string()) malformed(std::string("field '") + name + "' must be a string");
    return v.get<std::string>();
}

bool get_bool(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_boolean()) malformed(std::string("field '") + name + "' must be a boolean");
    return v.get<bool>();
}

std::size_t get_size(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_unsigned()) malformed(std::string("field '") + name + "' must be a natural number");
    return v.get<std::size_t>();
}

unsigned get_unsigned(const Json& j, const char* name) {
    const std::size_t v = get_size(j, name);
    if (v > 1000000) malformed(std::string("field '") + name + "' is out of range");
    return static_cast<unsigned>(v);
}

Json rational_json(const Rational& r) { return r.to_string(); }

Rational rational_from(const Json& v) {
    if (!v.is_string()) malformed("rational must be a \"num/den\" string");
    const std::string s = v.get<std::string>();
    Rational r;
    try {
        r = Rational::parse(s);
    } catch (const Error&) {
        malformed("bad rational '" + s + "'");
    }
    if (r.to_string() != s) malformed("non-canonical rational '" + s + "'");
    return r;
}

Rational get_rational(const Json& j, const char* name) { return rational_from(field(j, name)); }

Json poly_json(const Poly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(rational_json(c));
    return out;
}

Poly poly_from(const Json& v) {
    if (!v.is_array()) malformed("polynomial must be an array");
    std::vector<Rational> coeffs;
    for (const auto& c : v) coeffs.push_back(rational_from(c));
    if (!coeffs.empty() && coeffs.back().is_zero()) malformed("polynomial has a zero leading coefficient");
    return Poly(std::move(coeffs));
}

Json param_json(const std::optional<Parameter>& p) {
    if (!p) return nullptr;
    Json out;
    out["name"] = p->name;
    out["lo"] = p->lo ? rational_json(*p->lo) : Json(nullptr);
    out["hi"] = p->hi ? rational_json(*p->hi) : Json(nullptr);
    return out;
}

std::optional<Parameter> param_from(const Json& v) {
    if (v.is_null()) return std::nullopt;
    Parameter p;
    p.name = get_string(v, "name");
    if (!field(v, "lo").is_null()) p.lo = get_rational(v, "lo");
    if (!field(v, "hi").is_null()) p.hi = get_rational(v, "hi");
    return p;
}

Json expr_json(const MtpExpr& e) {
    Json out;
    out["variable"] = e.variable;
    out["param"] = param_json(e.param);
    Json terms = Json::array();
    for (const auto& t : e.terms) {
        Json term;
        term["alpha"] = {{"constant", rational_json(t.alpha.constant)}, {"slope", rational_json(t.alpha.slope)}};
        term["p"] = t.p;
        term["q"] = t.q;
        term["r"] = t.r;
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

MtpExpr expr_from(const Json& v) {
    MtpExpr e;
    e.variable = get_string(v, "variable");
    e.param = param_from(field(v, "param"));
    const Json& terms = field(v, "terms");
    if (!terms.is_array()) malformed("terms must be an array");
    for (const auto& t : terms) {
        const Json& alpha = field(t, "alpha");
        e.terms.push_back({{get_rational(alpha, "constant"), get_rational(alpha, "slope")},
                           get_unsigned(t, "p"),
                           get_unsigned(t, "q"),
                           get_unsigned(t, "r")});
    }
    return e;
}

Json evidence_json(const LabeledEvidence& le) {
    const PositivityEvidence& ev = le.evidence;
    Json out;
    out["label"] = le.label;
    out["mode"] = ev.mode == PositivityMode::strict ? "strict" : "nonstrict";
    out["poly"] = poly_json(ev.poly);
    out["lower"] = rational_json(ev.lower);
    out["upper"] = rational_json(ev.upper);
    out["upper_closed"] = ev.upper_closed;
    out["x_power"] = ev.x_power;
    out["square_free"] = poly_json(ev.square_free);
    out["chain_length"] = ev.chain_length;
    out["variations"] = {ev.variations_lower, ev.variations_upper};
    out["root_count"] = ev.root_count;
    out["sample"] = rational_json(ev.sample);
    out["sample_value"] = rational_json(ev.sample_value);
    out["lower_value"] = rational_json(ev.lower_value);
    out["upper_value"] = rational_json(ev.upper_value);
    out["holds"] = ev.holds;
    return out;
}

LabeledEvidence evidence_from(const Json& v) {
    LabeledEvidence le;
    le.label = get_string(v, "label");
    PositivityEvidence& ev = le.evidence;
    const std::string mode = get_string(v, "mode");
    if (mode == "strict")
        ev.mode = PositivityMode::strict;
    else if (mode == "nonstrict")
        ev.mode = PositivityMode::nonstrict;
    else
        malformed("unknown positivity mode '" + mode + "'");
    ev.poly = poly_from(field(v, "poly"));
    ev.lower = get_rational(v, "lower");
    ev.upper = get_rational(v, "upper");
    ev.upper_closed = get_bool(v, "upper_closed");
    ev.x_power = get_size(v, "x_power");
    ev.square_free = poly_from(field(v, "square_free"));
    ev.chain_length = get_size(v, "chain_length");
    const Json& var = field(v, "variations");
    if (!var.is_array() || var.size() != 2 || !var[0].is_number_unsigned() || !var[1].is_number_unsigned())
        malformed("variations must be a pair of natural numbers");
    ev.variations_lower = var[0].get<std::size_t>();
    ev.variations_upper = var[1].get<std::size_t>();
    ev.root_count = get_size(v, "root_count");
    ev.sample = get_rational(v, "sample");
    ev.sample_value = get_rational(v, "sample_value");
    ev.lower_value = get_rational(v, "lower_value");
    ev.upper_value = get_rational(v, "upper_value");
    ev.holds = get_bool(v, "holds");
    return le;
}

std::string sign_name(Sign s) { return s == Sign::positive ? "positive" : "negative"; }

Json to_json(const ProofCertificate& c) {
    Json out;
    out["cert_version"] = kCertVersion;
    out["original_text"] = c.original_text;
    out["variable"] = c.variable;
    if (c.parameter)
        out["parameter"] = {{"name", c.parameter->name},
                            {"lo", rational_json(c.parameter->lo)},
                            {"hi", rational_json(c.parameter->hi)}};
    else
        out["parameter"] = nullptr;
    out["method"] = to_string(c.method);
    out["normalized"] = expr_json(c.normalized);
    out["interval"] = {{"lower", rational_json(c.interval.lower)},
                       {"upper", c.interval.upper.to_string()},
                       {"upper_closed", c.interval.upper_closed}};
    out["proxy"] = {{"lower", rational_json(c.proxy.lower)},
                    {"upper", rational_json(c.proxy.upper)},
                    {"upper_closed", c.proxy.upper_closed},
                    {"uses_half_pi_proxy", c.proxy.uses_half_pi_proxy}};
    out["khat_plan"] = {{"khat", c.khat_plan.khat},
                        {"method", to_string(c.khat_plan.method)},
                        {"transformed", expr_json(c.khat_plan.transformed)}};
    Json plan = Json::array();
    for (const auto& tp : c.plan.per_term) {
        if (tp)
            plan.push_back({{"s", tp->s}, {"k", tp->k}, {"variant", to_string(tp->variant)}});
        else
            plan.push_back(nullptr);
    }
    out["plan"] = std::move(plan);
    Json bounds = Json::array();
    for (const auto& tb : c.bounds) {
        Json list = Json::array();
        for (const auto& b : tb.bounds)
            list.push_back({{"func", to_string(b.func)},
                            {"degree", b.degree},
                            {"direction", to_string(b.direction)},
                            {"power", b.power},
                            {"radius_squared", (b.degree + 3UL) * (b.degree + 4UL)}});
        bounds.push_back({{"term", tb.term}, {"bounds", std::move(list)}});
    }
    out["bounds"] = std::move(bounds);
    out["tp"] = {{"constant", poly_json(c.tp.constant)}, {"slope", poly_json(c.tp.slope)}};
    if (c.linear_form && c.linear_info) {
        out["linear_param"] = {{"p", poly_json(c.linear_form->p)},
                               {"q", poly_json(c.linear_form->q)},
                               {"a_lo", rational_json(c.linear_form->a_lo)},
                               {"a_hi", rational_json(c.linear_form->a_hi)},
                               {"endpoint_case", to_string(c.linear_info->endpoint_case)},
                               {"p_sign", c.linear_info->p_sign ? Json(sign_name(*c.linear_info->p_sign)) : Json(nullptr)}};
    } else {
        out["linear_param"] = nullptr;
    }
    Json evidence = Json::array();
    for (const auto& le : c.evidence) evidence.push_back(evidence_json(le));
    out["evidence"] = std::move(evidence);
    out["conclusion"] = c.conclusion;
    return out;
}

ProofCertificate from_json(const Json& j) {
    if (!j.is_object()) malformed("top level must be an object");
    const Json& version = field(j, "cert_version");
    if (!version.is_number_integer() || version.get<long>() != kCertVersion) malformed("unsupported cert_version");
    ProofCertificate c;
    c.original_text = get_string(j, "original_text");
    c.variable = get_string(j, "variable");
    if (const Json& p = field(j, "parameter"); !p.is_null())
        c.parameter = ParameterRange{get_string(p, "name"), get_rational(p, "lo"), get_rational(p, "hi")};
    c.method = parse_method_request(get_string(j, "method"));
    c.normalized = expr_from(field(j, "normalized"));
    const Json& iv = field(j, "interval");
    c.interval.lower = get_rational(iv, "lower");
    const std::string upper = get_string(iv, "upper");
    c.interval.upper = BoundaryValue::parse(upper);
    if (c.interval.upper.to_string() != upper) malformed("non-canonical interval upper '" + upper + "'");
    c.interval.upper_closed = get_bool(iv, "upper_closed");
    const Json& px = field(j, "proxy");
    c.proxy = {get_rational(px, "lower"), get_rational(px, "upper"), get_bool(px, "upper_closed"),
               get_bool(px, "uses_half_pi_proxy")};
    const Json& kp = field(j, "khat_plan");
    c.khat_plan = {get_unsigned(kp, "khat"), parse_khat_method(get_string(kp, "method")),
                   expr_from(field(kp, "transformed"))};
    c.plan.khat_plan = c.khat_plan;
    const Json& plan = field(j, "plan");
    if (!plan.is_array()) malformed("plan must be an array");
    for (const auto& tp : plan) {
        if (tp.is_null())
            c.plan.per_term.emplace_back(std::nullopt);
        else
            c.plan.per_term.emplace_back(
                TermPlan{get_unsigned(tp, "s"), get_unsigned(tp, "k"), parse_variant(get_string(tp, "variant"))});
    }
    const Json& bounds = field(j, "bounds");
    if (!bounds.is_array()) malformed("bounds must be an array");
    for (const auto& tb : bounds) {
        TermBounds out{get_size(tb, "term"), {}};
        const Json& list = field(tb, "bounds");
        if (!list.is_array()) malformed("term bounds must be an array");
        for (const auto& b : list) {
            const std::string func = get_string(b, "func");
            const std::string dir = get_string(b, "direction");
            if (func != "sin" && func != "cos") malformed("unknown function '" + func + "'");
            if (dir != "upward" && dir != "downward") malformed("unknown direction '" + dir + "'");
            BoundUse use{func == "sin" ? TrigFunction::sin : TrigFunction::cos, get_unsigned(b, "degree"),
                         dir == "upward" ? Direction::upward : Direction::downward, get_unsigned(b, "power")};
            if (get_size(b, "radius_squared") != (use.degree + 3UL) * (use.degree + 4UL))
                malformed("radius_squared does not match the bound degree");
            out.bounds.push_back(use);
        }
        c.bounds.push_back(std::move(out));
    }
    const Json& tp = field(j, "tp");
    c.tp = {poly_from(field(tp, "constant")), poly_from(field(tp, "slope"))};
    if (const Json& lp = field(j, "linear_param"); !lp.is_null()) {
        c.linear_form = LinearParamForm{poly_from(field(lp, "p")), poly_from(field(lp, "q")),
                                        get_rational(lp, "a_lo"), get_rational(lp, "a_hi")};
        LinearParamInfo info{parse_endpoint_case(get_string(lp, "endpoint_case")), std::nullopt};
        if (const Json& s = field(lp, "p_sign"); !s.is_null()) {
            const std::string name = get_string(lp, "p_sign");
            if (name == "positive")
                info.p_sign = Sign::positive;
            else if (name == "negative")
                info.p_sign = Sign::negative;
            else
                malformed("unknown p_sign '" + name + "'");
        }
        c.linear_info = info;
    }
    const Json& evidence = field(j, "evidence");
    if (!evidence.is_array()) malformed("evidence must be an array");
    for (const auto& le : evidence) c.evidence.push_back(evidence_from(le));
    c.conclusion = get_string(j, "conclusion");
    return c;
}

VerifyResult fail(std::string reason) { return {false, std::move(reason)}; }

}  // namespace

std::string serialize_certificate(const ProofCertificate& cert) { return to_json(cert).dump(2) + "\n"; }

ProofCertificate parse_certificate(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        malformed(std::string("invalid JSON: ") + ex.what());
    }
    return from_json(j);
}

VerifyResult verify_certificate(const ProofCertificate& cert) {
    try {
        if (cert.conclusion != "proven") return fail("conclusion is not 'proven'");
        const MtpExpr e = prepare_expr(cert.original_text, cert.variable, cert.parameter);
        if (!(e == cert.normalized)) return fail("normalized expression does not match the original text");
        cert.interval.validate_for_prover();
        if (!(cert.interval.proxy() == cert.proxy)) return fail("decision interval does not match the stated interval");
        const KhatPlan kp = select_khat(e, cert.interval, cert.method);
        if (!(kp == cert.khat_plan)) return fail("k-hat step does not match");
        if (!(cert.plan.khat_plan == kp)) return fail("plan refers to a different k-hat step");
        AffinePoly tp;
        try {
            tp = estimate_expr(cert.plan);
        } catch (const PlanError& ex) {
            return fail(std::string("plan not admissible: ") + ex.what());
        }
        const auto bounds = plan_bounds(cert.plan);
        if (!(bounds == cert.bounds)) return fail("recorded Taylor bounds do not match the plan");
        for (const auto& tb : bounds) {
            for (const auto& b : tb.bounds) {
                const TaylorBound bound = b.func == TrigFunction::sin ? taylor_sin(b.degree) : taylor_cos(b.degree);
                if (bound.direction != b.direction) return fail("Taylor bound used on the wrong side");
                if (!covers_half_pi(bound)) return fail("Taylor bound radius does not cover the interval");
            }
        }
        if (!(tp == cert.tp)) return fail("TP does not match the recomputed estimate");
        const TpEvidence ev = tp_evidence(tp, kp.transformed, cert.interval);
        if (!ev.holds) return fail("TP is not positive on the interval");
        if (!(ev.evidence == cert.evidence)) return fail("positivity evidence does not match");
        if (!(ev.linear_form == cert.linear_form) || !(ev.linear_info == cert.linear_info))
            return fail("parameter reduction does not match");
        return {true, "ok"};
    } catch (const std::exception& ex) {
        return fail(ex.what());
    }
}

VerifyResult verify_certificate_text(const std::string& text) {
    try {
        return verify_certificate(parse_certificate(text));
    } catch (const std::exception& ex) {
        return fail(ex.what());
    }
}

}  // namespace mtp
