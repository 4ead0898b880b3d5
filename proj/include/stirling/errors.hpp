#pragma once

#include <stdexcept>
#include <string>

namespace stirling {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (zero denominator, ln of a
// non-positive number, negative factorial, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Operands built over different parameter-symbol contexts.
class ContextMismatch : public Error {
public:
    using Error::Error;
};

class UnknownSymbol : public Error {
public:
    using Error::Error;
};

// A series vanished identically up to its truncation order; the caller
// must rebuild it at a higher order.
class TruncationExhausted : public Error {
public:
    explicit TruncationExhausted(const std::string& what)
        : Error(what + " (increase truncation order)") {}
};

// k <= 1 in the difference-to-sequence rate rule.
class RateHypothesisViolated : public Error {
public:
    using Error::Error;
};

// Leading coefficient no longer depends on any free parameter.
class CannotImprove : public Error {
public:
    using Error::Error;
};

// Leading coefficient is not affine in the parameter being eliminated.
class NonlinearElimination : public Error {
public:
    using Error::Error;
};

// Numeric comparison margin is below the arithmetic error bound.
class Indeterminate : public Error {
public:
    explicit Indeterminate(const std::string& what)
        : Error(what + " (indeterminate, raise precision)") {}
};

}  // namespace stirling
