#include "sliring/error.hpp"

namespace sliring {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain error";
    case ErrorKind::parse: return "parse error";
    case ErrorKind::sli_failure: return "SLI failure";
    case ErrorKind::basis_mismatch: return "basis mismatch";
    case ErrorKind::no_inverse: return "no inverse";
    case ErrorKind::io: return "I/O error";
    case ErrorKind::internal: return "internal error";
  }
  return "unknown error";
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace sliring
