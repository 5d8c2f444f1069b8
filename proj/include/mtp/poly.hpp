#pragma once

#include "mtp/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mtp {

/// Dense univariate polynomial over the rationals; coefficient i multiplies x^i.
/// The highest stored coefficient is never zero, so the zero polynomial is empty.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(const Rational& constant);

    static Poly monomial(const Rational& coeff, std::size_t power);
    static Poly x() { return monomial(Rational(1), 1); }

    /// std::nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t power) const;
    Rational leading() const;

    /// Horner evaluation.
    Rational operator()(const Rational& x) const;

    Poly derivative() const;
    Poly pow(unsigned exponent) const;
    /// Exponent of the lowest nonzero term; requires a nonzero polynomial.
    std::size_t valuation() const;
    /// Exact division by x^m; requires valuation() >= m.
    Poly divide_by_x_power(std::size_t m) const;
    Poly multiply_by_x_power(std::size_t m) const;
    /// Positive rational multiple with coprime integer coefficients.
    Poly primitive() const;
    Poly monic() const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Rational& scalar);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(Poly lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Poly operator*(const Rational& lhs, Poly rhs) { return rhs *= lhs; }
    Poly operator-() const;

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Human-readable form, highest power first, e.g. "x^2 - 3*x + 1/4".
    std::string to_string(std::string_view var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division; throws DomainError when the divisor is zero.
DivMod divmod(const Poly& dividend, const Poly& divisor);
/// Monic greatest common divisor (zero only when both inputs are zero).
Poly gcd(Poly a, Poly b);
/// p / gcd(p, p'): same distinct roots as p, all simple.
Poly square_free_part(const Poly& p);
/// Product of the square-free factors of odd multiplicity (Yun's decomposition).
Poly odd_multiplicity_part(const Poly& p);

Rational poly_eval(const Poly& p, const Rational& x);
Poly poly_mul(const Poly& p, const Poly& q);

}  // namespace mtp
