#pragma once

#include <stdexcept>
#include <string>

namespace qident {

// Base for every domain error raised by the library. The CLI maps these to
// exit code 1.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Exact division left a nonzero remainder. Upstream this means an identity
// that should have produced a polynomial quotient did not.
class NonzeroRemainder : public DomainError {
public:
  using DomainError::DomainError;
};

class UnsupportedIndex : public DomainError {
public:
  using DomainError::DomainError;
};

class NegativeExponent : public DomainError {
public:
  using DomainError::DomainError;
};

class NonUnitConstantTerm : public DomainError {
public:
  using DomainError::DomainError;
};

class EmptyRange : public DomainError {
public:
  using DomainError::DomainError;
};

} // namespace qident
