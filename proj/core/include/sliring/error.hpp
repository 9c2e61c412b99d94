#pragma once

#include <stdexcept>
#include <string>

namespace sliring {

// Error categories. The CLI maps each one to its own exit status.
enum class ErrorKind {
  domain,          // precondition violated (bad α, bad trapezoid, arity, ...)
  parse,           // malformed input document
  sli_failure,     // basis could not be certified strongly linearly independent
  basis_mismatch,  // operands tied to different bases or wrong coordinate count
  no_inverse,      // core value is (numerically) zero
  io,              // file could not be read or written
  internal,        // broken invariant that should be unreachable
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace sliring
