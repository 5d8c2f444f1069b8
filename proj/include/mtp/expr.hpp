#pragma once

#include "mtp/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mtp {

/// constant + slope * a, for a single real parameter a.
struct Affine {
    Rational constant;
    Rational slope;

    Rational at(const Rational& a) const { return constant + slope * a; }
    bool is_zero() const { return constant.is_zero() && slope.is_zero(); }
    bool is_constant() const { return slope.is_zero(); }

    Affine& operator+=(const Affine& rhs);
    Affine& operator*=(const Rational& scalar);
    friend Affine operator+(Affine lhs, const Affine& rhs) { return lhs += rhs; }
    friend Affine operator*(Affine lhs, const Rational& rhs) { return lhs *= rhs; }
    Affine operator-() const { return {-constant, -slope}; }
    friend bool operator==(const Affine&, const Affine&) = default;
};

/// alpha * x^p * cos(x)^q * sin(x)^r. q is always the cosine exponent.
struct MtpTerm {
    Affine alpha;
    unsigned p = 0;
    unsigned q = 0;
    unsigned r = 0;

    bool is_pure_polynomial() const { return q == 0 && r == 0; }
    friend bool operator==(const MtpTerm&, const MtpTerm&) = default;
};

/// The parameter a and its open range (lo, hi); the range is unset until the
/// caller supplies one (parsing alone only discovers the name).
struct Parameter {
    std::string name;
    std::optional<Rational> lo;
    std::optional<Rational> hi;

    bool has_range() const { return lo && hi; }
    friend bool operator==(const Parameter&, const Parameter&) = default;
};

struct MtpExpr {
    std::vector<MtpTerm> terms;
    std::optional<Parameter> param;
    std::string variable = "x";

    friend bool operator==(const MtpExpr&, const MtpExpr&) = default;
};

enum class Sign { positive, negative };

/// Sign of an affine coefficient over the open parameter range. Endpoint
/// values may vanish (the range is open) but must not disagree.
/// Throws SignIndefiniteError; a parametric coefficient needs a range.
Sign coefficient_sign(const Affine& alpha, const std::optional<Parameter>& param);

/// Merges like terms, drops zero coefficients, sorts by (p, q, r).
/// Throws ZeroExpressionError when nothing remains.
MtpExpr normalize(const MtpExpr& e);

/// Rewrites cos^(2j+e) = cos^e (1 - sin^2)^j (e in {0,1}); the result has no
/// even cosine power above zero. Output is normalized.
MtpExpr eliminate_even_cos(const MtpExpr& e);

/// Text accepted back by parse_expr.
std::string to_string(const MtpExpr& e);
std::string to_string(const Affine& alpha, const std::string& param_name);

/// Certified enclosure of f(x) at 0 < x <= 3 for a fixed parameter value.
struct ValueEnclosure {
    Rational lo;
    Rational hi;
};
ValueEnclosure enclose_value(const MtpExpr& e, const Rational& x, const Rational& a = Rational(0));

}  // namespace mtp
