#pragma once

#include <stdexcept>
#include <string>

namespace hilbert {

// Argument outside the mathematical domain of an operation (bad index,
// dimension mismatch, inadmissible exponent, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured size budget would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hilbert
