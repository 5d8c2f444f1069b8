#include "cli.hpp"

#include "golden.hpp"
#include "mtp/certificate.hpp"
#include "mtp/errors.hpp"
#include "mtp/prover.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace mtp::cli {

std::string default_golden_dir() { return MTP_GOLDEN_DIR; }

namespace {

struct CliConfig {
    std::string expr_text;
    std::string interval_upper = "pi/2";
    std::optional<bool> interval_upper_closed;
    std::string method = "auto";
    std::string param_spec;
    std::string variable;
    unsigned max_index_budget = 12;
    std::string certificate_path;
    int verbosity = 0;
};

ParameterRange parse_param(const std::string& spec) {
    const auto eq = spec.find('=');
    const auto dots = spec.find("..");
    if (eq == std::string::npos || dots == std::string::npos || dots < eq || eq == 0)
        throw DomainError("parameter must look like a=lo..hi, got '" + spec + "'");
    return {spec.substr(0, eq), Rational::parse(spec.substr(eq + 1, dots - eq - 1)),
            Rational::parse(spec.substr(dots + 2))};
}

IntervalSpec make_interval(const CliConfig& cfg) {
    const BoundaryValue upper = BoundaryValue::parse(cfg.interval_upper);
    const bool closed = cfg.interval_upper_closed.value_or(!upper.is_half_pi());
    return {Rational(0), upper, closed};
}

std::string plan_summary(const EstimationPlan& plan) {
    std::string out;
    for (const auto& tp : plan.per_term) {
        out += out.empty() ? "" : ",";
        out += tp ? "(" + std::to_string(tp->s) + "," + std::to_string(tp->k) + "," + to_string(tp->variant) + ")"
                  : "-";
    }
    return "[" + out + "]";
}

std::string interval_text(const RationalInterval& r) { return "[" + r.lo.to_display() + ", " + r.hi.to_display() + "]"; }

void print_trace(std::ostream& out, const ProveOutcome& o, const std::string& var) {
    for (const auto& a : o.attempts)
        out << "  try s=" << a.s << " k=" << a.k << ": " << a.reason << "\n";
    if (o.certificate) {
        const ProofCertificate& c = *o.certificate;
        out << "normalized: " << to_string(c.normalized) << "\n";
        out << "interval: " << c.interval.to_string();
        if (c.proxy.uses_half_pi_proxy) out << " decided on (0, " << c.proxy.upper.to_display() << "]";
        out << "\n";
        out << "khat: " << c.khat_plan.khat << " (" << to_string(c.khat_plan.method) << ")\n";
        if (c.khat_plan.method == KhatMethod::method_d)
            out << "transformed: " << to_string(c.khat_plan.transformed) << "\n";
        out << "plan: " << plan_summary(c.plan) << "\n";
        if (c.linear_form) {
            out << "p(" << var << ") = " << c.linear_form->p.to_string(var) << "\n";
            out << "q(" << var << ") = " << c.linear_form->q.to_string(var) << "\n";
        } else {
            out << "TP(" << var << ") = " << c.tp.constant.to_string(var) << "\n";
        }
        for (const auto& le : c.evidence)
            out << "evidence " << le.label << ": " << le.evidence.root_count << " roots, sample "
                << le.evidence.sample.to_display() << " -> " << le.evidence.sample_value.to_double() << "\n";
    } else {
        if (o.failure.rejected_tp) out << "last TP(" << var << ") = " << o.failure.rejected_tp->to_string(var) << "\n";
    }
}

void print_status(std::ostream& out, const ProveOutcome& o) {
    if (o.certificate) {
        const ProofCertificate& c = *o.certificate;
        const auto deg = c.linear_form ? std::max(c.linear_form->p.degree(), c.linear_form->q.degree())
                                       : c.tp.constant.degree();
        out << "status=proven khat=" << c.khat_plan.khat << " method=" << to_string(c.khat_plan.method)
            << " plan=" << plan_summary(c.plan) << " tp_degree=" << (deg ? std::to_string(*deg) : "none") << "\n";
        return;
    }
    out << "status=" << (o.status == ProofStatus::disproven ? "disproven" : "not-proven") << " reason=\""
        << o.failure.message << "\"";
    if (o.failure.root) out << " root=" << interval_text(*o.failure.root);
    if (o.failure.witness) out << " witness=" << o.failure.witness->to_display();
    if (o.failure.counterexample) {
        const Counterexample& ce = *o.failure.counterexample;
        out << " counterexample_x=" << ce.x.to_display();
        if (ce.a) out << " counterexample_a=" << ce.a->to_display();
        out << " f_upper=" << ce.value.hi.to_double();
    }
    out << "\n";
}

int run_prove(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const IntervalSpec interval = make_interval(cfg);
    ProveOptions options;
    options.method = parse_method_request(cfg.method);
    if (options.method == MethodRequest::method_c && interval.upper.is_half_pi()) {
        err << "error: method-c requires a rational upper bound below pi/2\n";
        return kExitUsage;
    }
    options.budget = cfg.max_index_budget;
    if (!cfg.param_spec.empty()) options.parameter = parse_param(cfg.param_spec);
    if (!cfg.variable.empty()) options.variable = cfg.variable;

    ProveOutcome outcome;
    try {
        outcome = prove(cfg.expr_text, interval, options);
    } catch (const ZeroExpressionError& ex) {
        out << "status=not-proven reason=\"" << ex.what() << ": f > 0 is false\"\n";
        return kExitNotProven;
    } catch (const BudgetExhaustedError& ex) {
        out << "status=not-proven reason=\"" << ex.what() << "\"\n";
        return kExitNotProven;
    }
    if (cfg.verbosity > 0) print_trace(out, outcome, outcome.certificate ? outcome.certificate->variable : "x");
    print_status(out, outcome);
    if (!outcome.certificate) return kExitNotProven;
    if (!cfg.certificate_path.empty()) {
        std::ofstream file(cfg.certificate_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << cfg.certificate_path << "\n";
            return kExitUsage;
        }
        file << serialize_certificate(*outcome.certificate);
    }
    return kExitProven;
}

int run_verify(const std::string& path, std::ostream& out, std::ostream& err) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot read " << path << "\n";
        return kExitUsage;
    }
    std::ostringstream text;
    text << file.rdbuf();
    const VerifyResult r = verify_certificate_text(text.str());
    out << (r.ok ? "verified" : "rejected: " + r.reason) << "\n";
    return r.ok ? kExitProven : kExitNotProven;
}

struct ReproCase {
    std::string name;
    std::string text;
    IntervalSpec interval;
    ProveOptions options;
    // golden name -> polynomial extracted from the certificate
    std::vector<std::pair<std::string, std::function<Poly(const ProofCertificate&)>>> checks;
};

std::vector<ReproCase> repro_cases() {
    auto tp = [](const ProofCertificate& c) { return c.tp.constant; };
    ProveOptions yang;
    yang.parameter = ParameterRange{"a", Rational(1), Rational(3, 2)};
    yang.variable = "t";
    return {
        {"mortici", "x^3*cos(x) - sin(x)^3 + (1/15)*x^7", IntervalSpec::to_half_pi(), {}, {{"tp", tp}}},
        {"pade-left", "cos(x)^2*(17*x^4 + 420*x^2 + 4095) + 59*x^6 - 962*x^4 + 3675*x^2 - 4095",
         IntervalSpec::half_open(Rational(0), Rational(1551414, 1000000)), {}, {{"tp", tp}}},
        {"pade-right", "163*x^4 - 780*x^2 + 945 - (13*x^4 + 165*x^2 + 945)*cos(x)^2", IntervalSpec::to_half_pi(), {},
         {{"tp", tp}}},
        {"yang-param", "4*t*(a-1)*cos(t)^2 - 2*a*sin(t)*cos(t) - 2*t*(a-2)", IntervalSpec::to_half_pi(), yang,
         {{"p", [](const ProofCertificate& c) { return c.linear_form->p; }},
          {"q", [](const ProofCertificate& c) { return c.linear_form->q; }},
          {"endpoint_hi", [](const ProofCertificate& c) { return c.linear_form->at(c.linear_form->a_hi); }}}},
    };
}

int run_reproduce(const std::string& name, const std::string& golden_dir, int verbosity, std::ostream& out,
                  std::ostream& err) {
    for (const ReproCase& rc : repro_cases()) {
        if (rc.name != name) continue;
        const GoldenSet golden = read_golden((std::filesystem::path(golden_dir) / (name + ".txt")).string());
        const ProveOutcome o = prove(rc.text, rc.interval, rc.options);
        const std::string var = rc.options.variable.value_or("x");
        out << name << ": " << rc.text << " on " << rc.interval.to_string() << "\n";
        if (verbosity > 0) print_trace(out, o, var);
        if (!o.certificate) {
            print_status(out, o);
            return kExitNotProven;
        }
        bool all = true;
        for (const auto& [gname, extract] : rc.checks) {
            const Poly got = extract(*o.certificate);
            const Poly& want = golden_poly(golden, gname);
            const bool match = got == want;
            all = all && match;
            out << gname << "(" << var << ") = " << got.to_string(var) << "  [" << (match ? "match" : "MISMATCH")
                << "]\n";
            if (!match) out << "  golden: " << want.to_string(var) << "\n";
        }
        print_status(out, o);
        return all ? kExitProven : kExitNotProven;
    }
    err << "error: unknown case '" << name << "' (mortici, pade-left, pade-right, yang-param)\n";
    return kExitUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Prove mixed trigonometric-polynomial inequalities f(x) > 0 on (0, b]", "mtp-prove"};
    app.require_subcommand(1);

    CliConfig cfg;
    auto* prove_cmd = app.add_subcommand("prove", "prove f(x) > 0");
    prove_cmd->add_option("expr", cfg.expr_text, "expression f")->required();
    prove_cmd->add_option("--upper", cfg.interval_upper, "upper end: pi/2 or a rational n/d");
    auto* open_flag = prove_cmd->add_flag("--open", "exclude the upper end");
    auto* closed_flag = prove_cmd->add_flag("--closed", "include the upper end");
    open_flag->excludes(closed_flag);
    prove_cmd->add_option("--method", cfg.method, "auto, method-c or method-d")
        ->check(CLI::IsMember({"auto", "method-c", "method-d"}));
    prove_cmd->add_option("--param", cfg.param_spec, "parameter range a=lo..hi (open)");
    prove_cmd->add_option("--var", cfg.variable, "variable name");
    prove_cmd->add_option("--budget", cfg.max_index_budget, "largest degree index tried");
    prove_cmd->add_option("--cert", cfg.certificate_path, "write the certificate here");
    prove_cmd->add_flag("-v,--verbose", cfg.verbosity, "print the reduction trace");

    std::string cert_path;
    auto* verify_cmd = app.add_subcommand("verify", "re-check a certificate");
    verify_cmd->add_option("certificate", cert_path)->required();

    std::string case_name;
    std::string golden_dir = default_golden_dir();
    int repro_verbosity = 0;
    auto* repro_cmd = app.add_subcommand("reproduce", "run a built-in case against its golden file");
    repro_cmd->add_option("name", case_name)->required();
    repro_cmd->add_option("--golden-dir", golden_dir);
    repro_cmd->add_flag("-v,--verbose", repro_verbosity);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitProven;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitProven;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*prove_cmd) {
            if (*open_flag) cfg.interval_upper_closed = false;
            if (*closed_flag) cfg.interval_upper_closed = true;
            return run_prove(cfg, out, err);
        }
        if (*verify_cmd) return run_verify(cert_path, out, err);
        return run_reproduce(case_name, golden_dir, repro_verbosity, out, err);
    } catch (const Error& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace mtp::cli
