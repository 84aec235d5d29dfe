#pragma once

#include <stdexcept>
#include <string>

namespace sdg {

/// Operation applied outside its mathematical domain (division by zero,
/// square root of a non-positive number, distance of non-apart points).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Element with a non-invertible pure part passed where a unit is required.
class NotInvertibleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// API misuse: mixed algebra contexts, dimension mismatch, a point that is
/// not on the figure it is supposed to lie on, unknown batch.
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Two spheres do not satisfy the radius/distance relation for touching.
class NotTouchingError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Configuration for which the question is ill-posed (zero linear form,
/// point on the hyperplane it should be projected onto, ...).
class DegenerateError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A modelling assumption the caller relied on was found false at sample
/// resolution (e.g. a second foot within the parallel-surface distance).
class AssumptionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Explicit resource limit hit (e.g. nested square-root depth cap).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed scene or scenario input. `where` is a JSON pointer.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace sdg
