#pragma once

#include <stdexcept>
#include <string>

namespace zdensity {

// Failure categories surfaced across the C boundary as status codes.
enum class ErrorKind {
  domain,              // argument outside the mathematical domain
  pole,                // evaluation at s = 1
  unsupported_height,  // |t| above the desk-scale ceiling
  singular_parameter,  // a denominator such as H_rh - H vanishes
  invalid_argument,    // malformed input (empty grid spec, bad flag value)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace zdensity
