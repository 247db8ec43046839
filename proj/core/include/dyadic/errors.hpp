#pragma once

#include <stdexcept>
#include <string>

namespace dyadic {

// A well-formed request that has no answer in the dyadic setting
// (degenerate triangle, non-invertible map, valuation of zero, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

class DegenerateError : public DomainError {
 public:
  explicit DegenerateError(const std::string& what) : DomainError(what) {}
};

// Malformed textual input.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace dyadic
