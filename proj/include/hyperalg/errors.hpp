// Exception types shared across the library. Semantic verdicts (axiom
// failures, theorem counterexamples found by the harness) are NOT exceptions;
// checkers return witness reports. Exceptions cover API misuse, unmet
// operation preconditions, parse errors and enumeration budget refusals.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperalg {

// Caller broke an API contract (index out of range, length mismatch, ...).
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

// A documented semantic precondition of an operation does not hold for the
// given inputs (non-subspace argument, dependent seed, unclosed span, ...).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what)
      : std::runtime_error(what) {}
};

// An established law failed on inputs satisfying its hypotheses. Raised
// instead of silently returning a wrong answer.
class TheoremViolation : public std::runtime_error {
 public:
  explicit TheoremViolation(const std::string& what)
      : std::runtime_error(what) {}
};

// Enumeration refused: the estimated candidate count exceeds the budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, double estimated_cost)
      : std::runtime_error(what), estimated_cost(estimated_cost) {}
  double estimated_cost;
};

// Structure-file syntax or totality error, with 1-based location.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

}  // namespace hyperalg
