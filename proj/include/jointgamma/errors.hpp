#pragma once

#include <stdexcept>
#include <string>

namespace jointgamma {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An iterative evaluation hit its iteration cap before reaching tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace detail
}  // namespace jointgamma
