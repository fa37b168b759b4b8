#pragma once

#include <stdexcept>
#include <string>

namespace zeck {

// Recoverable errors caused by the caller's inputs.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// a - b requested with a < b.
class NegativeResult : public DomainError {
public:
    using DomainError::DomainError;
};

class DivisionByZero : public DomainError {
public:
    using DomainError::DomainError;
};

// Multiple table of zero requested.
class ZeroMultiplicand : public DomainError {
public:
    using DomainError::DomainError;
};

// Bad character or malformed numeral text.
class ParseError : public DomainError {
public:
    using DomainError::DomainError;
};

// 0/1 digit string that breaks a canonical-form constraint.
class CanonicityError : public DomainError {
public:
    using DomainError::DomainError;
};

// Identity check requested outside its stated parameter bounds.
class PreconditionViolated : public DomainError {
public:
    using DomainError::DomainError;
};

// Report destination failed to accept a write.
class SinkError : public DomainError {
public:
    using DomainError::DomainError;
};

// Broken invariant inside the library; never expected on valid inputs.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace zeck
