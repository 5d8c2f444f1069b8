#include "mtp/poly.hpp"

#include "mtp/errors.hpp"

#include <utility>

namespace mtp {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rational& constant) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly Poly::monomial(const Rational& coeff, std::size_t power) {
    if (coeff.is_zero()) return {};
    std::vector<Rational> c(power + 1);
    c[power] = coeff;
    return Poly(std::move(c));
}

std::optional<std::size_t> Poly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Rational Poly::coeff(std::size_t power) const { return power < coeffs_.size() ? coeffs_[power] : Rational(); }

Rational Poly::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

Rational Poly::operator()(const Rational& x) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x.raw();
        acc += it->raw();
    }
    return Rational(std::move(acc));
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(i);
    return Poly(std::move(d));
}

Poly Poly::pow(unsigned exponent) const {
    Poly result(Rational(1));
    Poly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

std::size_t Poly::valuation() const {
    if (is_zero()) throw ZeroPolynomialError();
    std::size_t m = 0;
    while (coeffs_[m].is_zero()) ++m;
    return m;
}

Poly Poly::divide_by_x_power(std::size_t m) const {
    if (m == 0 || is_zero()) return *this;
    if (valuation() < m) throw DomainError("polynomial not divisible by x^" + std::to_string(m));
    return Poly(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(m), coeffs_.end()));
}

Poly Poly::multiply_by_x_power(std::size_t m) const {
    if (m == 0 || is_zero()) return *this;
    std::vector<Rational> c(m);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(c));
}

Poly Poly::primitive() const {
    if (is_zero()) return {};
    mpz_class den_lcm = 1;
    for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
    std::vector<mpz_class> ints;
    ints.reserve(coeffs_.size());
    mpz_class content = 0;
    for (const auto& c : coeffs_) {
        mpz_class v = c.raw().get_num() * (den_lcm / c.raw().get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    std::vector<Rational> out;
    out.reserve(ints.size());
    for (auto& v : ints) out.emplace_back(mpz_class(v / content), mpz_class(1));
    return Poly(std::move(out));
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    return *this * leading().inverse();
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<mpq_class> acc(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) acc[i + j] += lhs.coeffs_[i].raw() * rhs.coeffs_[j].raw();
    }
    std::vector<Rational> out;
    out.reserve(acc.size());
    for (auto& v : acc) out.emplace_back(std::move(v));
    return Poly(std::move(out));
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

std::string Poly::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (out.empty())
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        bool unit = mag == Rational(1);
        if (i == 0 || !unit) out += mag.to_display();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

DivMod divmod(const Poly& dividend, const Poly& divisor) {
    if (divisor.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> rem = dividend.coeffs();
    const auto& d = divisor.coeffs();
    const std::size_t dn = d.size();
    if (rem.size() < dn) return {Poly(), dividend};
    std::vector<Rational> quot(rem.size() - dn + 1);
    const Rational lead_inv = d.back().inverse();
    for (std::size_t i = rem.size() - 1;; --i) {
        Rational factor = rem[i] * lead_inv;
        quot[i - (dn - 1)] = factor;
        if (!factor.is_zero())
            for (std::size_t j = 0; j < dn; ++j) rem[i - (dn - 1) + j] -= factor * d[j];
        if (i == dn - 1) break;
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).remainder;
        a = std::move(b);
        b = r.primitive();
    }
    return a.monic();
}

Poly square_free_part(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomialError();
    if (p.is_constant()) return p;
    Poly g = gcd(p, p.derivative());
    return divmod(p, g).quotient;
}

Poly odd_multiplicity_part(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomialError();
    if (p.is_constant()) return Poly(Rational(1));
    // Yun: p = c * prod f_i^i; collect f_i for odd i.
    Poly a = gcd(p, p.derivative());
    Poly b = divmod(p, a).quotient;
    Poly c = divmod(p.derivative(), a).quotient;
    Poly d = c - b.derivative();
    Poly result(Rational(1));
    for (unsigned i = 1; !(b.is_constant()); ++i) {
        Poly f = gcd(b, d);
        if (i % 2 == 1) result = result * f;
        b = divmod(b, f).quotient;
        c = divmod(d, f).quotient;
        d = c - b.derivative();
    }
    return result.monic();
}

Rational poly_eval(const Poly& p, const Rational& x) { return p(x); }

Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }

}  // namespace mtp
