#ifndef COSPROD_ERRORS_HPP
#define COSPROD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cosprod {

// Raised when an argument lies outside the mathematical domain of an
// operation (n < 1 for the product, |x| >= pi/2 for the log series, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public DomainError {
 public:
  DivisionByZero() : DomainError("division by zero") {}
  explicit DivisionByZero(const std::string& what) : DomainError(what) {}
};

}  // namespace cosprod

#endif  // COSPROD_ERRORS_HPP
