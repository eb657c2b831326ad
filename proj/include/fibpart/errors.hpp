#ifndef FIBPART_ERRORS_HPP
#define FIBPART_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fibpart {

/// An argument lies outside the domain of the operation (e.g. fib(0)).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A structured value violates its invariants (e.g. consecutive Zeckendorf indices).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Working precision is too low to produce a trustworthy answer.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A request would exhaust memory or another hard resource.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

[[noreturn]] inline void domain_fail(const std::string& what) { throw DomainError(what); }

}  // namespace detail
}  // namespace fibpart

#endif  // FIBPART_ERRORS_HPP
