#pragma once

#include <stdexcept>
#include <string>

namespace exstat {

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A bracketed solve was handed an interval without a sign change.
struct NoSignChange : std::invalid_argument {
  explicit NoSignChange(const std::string& what) : std::invalid_argument(what) {}
};

/// An iterative scheme ran out of iterations or subdivisions.
struct NoConvergence : std::runtime_error {
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// Series evaluation requested at or beyond the radius of convergence.
struct OutsideRadius : std::domain_error {
  explicit OutsideRadius(const std::string& what) : std::domain_error(what) {}
};

/// Truncated series whose last retained term is still above the tail bound.
struct TailTooLarge : std::runtime_error {
  explicit TailTooLarge(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace exstat
