#include "mtp/expr.hpp"

#include "mtp/errors.hpp"
#include "mtp/interval.hpp"
#include "mtp/taylor.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace mtp {

Affine& Affine::operator+=(const Affine& rhs) {
    constant += rhs.constant;
    slope += rhs.slope;
    return *this;
}

Affine& Affine::operator*=(const Rational& scalar) {
    constant *= scalar;
    slope *= scalar;
    return *this;
}

Sign coefficient_sign(const Affine& alpha, const std::optional<Parameter>& param) {
    if (alpha.is_constant()) {
        if (alpha.constant.is_zero()) throw SignIndefiniteError("zero coefficient has no sign");
        return alpha.constant.sign() > 0 ? Sign::positive : Sign::negative;
    }
    if (!param || !param->has_range())
        throw SignIndefiniteError("parametric coefficient needs a parameter range");
    const int at_lo = alpha.at(*param->lo).sign();
    const int at_hi = alpha.at(*param->hi).sign();
    if (at_lo >= 0 && at_hi >= 0 && (at_lo > 0 || at_hi > 0)) return Sign::positive;
    if (at_lo <= 0 && at_hi <= 0 && (at_lo < 0 || at_hi < 0)) return Sign::negative;
    throw SignIndefiniteError("coefficient " + to_string(alpha, param->name) + " changes sign on (" +
                              param->lo->to_display() + ", " + param->hi->to_display() + ")");
}

MtpExpr normalize(const MtpExpr& e) {
    std::map<std::tuple<unsigned, unsigned, unsigned>, Affine> merged;
    for (const auto& t : e.terms) merged[{t.p, t.q, t.r}] += t.alpha;
    MtpExpr out;
    out.param = e.param;
    out.variable = e.variable;
    for (const auto& [key, alpha] : merged) {
        if (alpha.is_zero()) continue;
        const auto& [p, q, r] = key;
        out.terms.push_back({alpha, p, q, r});
    }
    if (out.terms.empty()) throw ZeroExpressionError();
    return out;
}

MtpExpr eliminate_even_cos(const MtpExpr& e) {
    MtpExpr out;
    out.param = e.param;
    out.variable = e.variable;
    for (const auto& t : e.terms) {
        if (t.q < 2) {
            out.terms.push_back(t);
            continue;
        }
        const unsigned j = t.q / 2;
        mpz_class binom = 1;
        for (unsigned i = 0; i <= j; ++i) {
            Rational c(i % 2 == 0 ? binom : mpz_class(-binom), mpz_class(1));
            out.terms.push_back({t.alpha * c, t.p, t.q % 2, t.r + 2 * i});
            binom = binom * (j - i) / (i + 1);
        }
    }
    return normalize(out);
}

std::string to_string(const Affine& alpha, const std::string& param_name) {
    auto wrap = [](const Rational& r) {
        return r.is_integer() && r.sign() >= 0 ? r.to_display() : "(" + r.to_display() + ")";
    };
    if (alpha.is_constant()) return wrap(alpha.constant);
    const Rational mag = alpha.slope.abs();
    const std::string slope = mag == Rational(1) ? param_name : wrap(mag) + "*" + param_name;
    if (alpha.constant.is_zero()) return alpha.slope.sign() < 0 ? "(-" + slope + ")" : slope;
    return "(" + alpha.constant.to_display() + (alpha.slope.sign() < 0 ? " - " : " + ") + slope + ")";
}

std::string to_string(const MtpExpr& e) {
    const std::string param = e.param ? e.param->name : "a";
    const std::string& v = e.variable;
    std::string out;
    for (const auto& t : e.terms) {
        std::vector<std::string> factors;
        Affine alpha = t.alpha;
        const bool negative = alpha.is_constant() ? alpha.constant.sign() < 0
                                                : alpha.constant.is_zero() && alpha.slope.sign() < 0;
        if (negative) alpha = -alpha;
        if (!(alpha.is_constant() && alpha.constant == Rational(1)) || (t.is_pure_polynomial() && t.p == 0))
            factors.push_back(to_string(alpha, param));
        if (t.p > 0) factors.push_back(v + (t.p > 1 ? "^" + std::to_string(t.p) : ""));
        if (t.q > 0) factors.push_back("cos(" + v + ")" + (t.q > 1 ? "^" + std::to_string(t.q) : ""));
        if (t.r > 0) factors.push_back("sin(" + v + ")" + (t.r > 1 ? "^" + std::to_string(t.r) : ""));
        std::string body;
        for (const auto& f : factors) body += (body.empty() ? "" : "*") + f;
        if (out.empty())
            out = (negative ? "-" : "") + body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

ValueEnclosure enclose_value(const MtpExpr& e, const Rational& x, const Rational& a) {
    if (x.sign() <= 0 || x > half_pi_lo()) throw DomainError("enclosure point must lie in (0, pi/2)");
    const TrigEnclosure s = enclose_sin(x);
    const TrigEnclosure c = enclose_cos(x);
    // On (0, pi/2) both functions are nonnegative; clamp so powers stay monotone.
    const Rational s_lo = std::max(s.lo, Rational(0));
    const Rational c_lo = std::max(c.lo, Rational(0));
    ValueEnclosure total{Rational(0), Rational(0)};
    for (const auto& t : e.terms) {
        const Rational base = x.pow(t.p);
        const Rational lo = base * c_lo.pow(t.q) * s_lo.pow(t.r);
        const Rational hi = base * c.hi.pow(t.q) * s.hi.pow(t.r);
        const Rational alpha = t.alpha.at(a);
        if (alpha.sign() >= 0) {
            total.lo += alpha * lo;
            total.hi += alpha * hi;
        } else {
            total.lo += alpha * hi;
            total.hi += alpha * lo;
        }
    }
    return total;
}

}  // namespace mtp
