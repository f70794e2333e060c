// Shared error types and the exact integer type used across the workbench.
#ifndef SIMPCAT_COMMON_HPP_
#define SIMPCAT_COMMON_HPP_

#include <memory>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace simpcat {

using Integer = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A closure, enumeration or certification limit was hit. Usually signals an
// infinite (or too large) object rather than a bug.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed input or violated precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

// Structural audit failed; the message carries the witness.
class AuditFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace simpcat

#endif  // SIMPCAT_COMMON_HPP_
