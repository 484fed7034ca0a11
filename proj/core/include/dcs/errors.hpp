#pragma once

#include <stdexcept>
#include <string>

namespace dcs {

// Input outside the mathematical domain of an operation (x <= 1 for zeta,
// sigma <= 1/q for point evaluation, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Request exceeds a documented size guard (support too large, sieve too big).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input (coefficient files, reports).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bounded search ran off the end of its range without success.
class SearchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iteration that is expected to converge did not. Never silently ignored.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dcs
