#pragma once

#include <stdexcept>
#include <string>

namespace rieszdrop {

// Argument outside the stated domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Iterative method failed: series cap exceeded, bracket without a sign
// change, iteration cap reached.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BracketError : public SolverError {
 public:
  using SolverError::SolverError;
};

namespace detail {

[[noreturn]] void throw_domain(const char* function, const std::string& what);

}  // namespace detail

}  // namespace rieszdrop
