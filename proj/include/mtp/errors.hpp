#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mtp {

/// Base class for every error raised by the prover library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ZeroPolynomialError : public Error {
public:
    ZeroPolynomialError() : Error("sign undecidable for zero polynomial") {}
};

class NotUniquelyRootedError : public Error {
public:
    explicit NotUniquelyRootedError(std::size_t count)
        : Error("not uniquely rooted (" + std::to_string(count) + " roots in interval)"), count_(count) {}
    std::size_t count() const { return count_; }

private:
    std::size_t count_;
};

/// Syntax or semantic error in an expression; position is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class ZeroExpressionError : public Error {
public:
    ZeroExpressionError() : Error("zero expression") {}
};

/// An affine coefficient changes sign over the parameter interval.
class SignIndefiniteError : public Error {
public:
    using Error::Error;
};

/// A degree plan violates admissibility (k below k-hat, unsound variant, ...).
class PlanError : public Error {
public:
    using Error::Error;
};

class BudgetExhaustedError : public Error {
public:
    using Error::Error;
};

}  // namespace mtp
