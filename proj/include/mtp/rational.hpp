#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace mtp {

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;

    template <std::signed_integral I>
    Rational(I value) : value_(static_cast<long>(value)) {}

    template <std::unsigned_integral I>
    Rational(I value) : value_(static_cast<unsigned long>(value)) {}

    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class value);

    /// Parses "n" or "n/d" (decimal, optional leading '-'); throws DomainError.
    static Rational parse(std::string_view text);
    static Rational pow10(unsigned exponent);

    /// Serialized "num/den" form; the denominator is always written.
    std::string to_string() const;
    /// Shorter display form: "n" for integers, "n/d" otherwise.
    std::string to_display() const;
    double to_double() const { return value_.get_d(); }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational abs() const;
    Rational inverse() const;
    Rational pow(unsigned exponent) const;
    mpz_class floor() const;
    mpz_class ceil() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

private:
    mpq_class value_;
};

Rational midpoint(const Rational& a, const Rational& b);

}  // namespace mtp
