#pragma once

#include <stdexcept>
#include <string>

namespace kf {

enum class ErrorKind {
  BadArgument,     // caller violated a documented precondition
  ParseError,      // malformed input document
  InvalidComplex,  // complex failed manifold/orientation validation
  NotFound,        // named knot or entity missing
  Internal,        // invariant violation inside the library
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace kf
