#pragma once

#include <stdexcept>
#include <string>

namespace multinorm {

enum class ErrorKind {
  InvalidInput,   // malformed or out-of-range arguments
  SpecMismatch,   // spec not applicable to the exponent/space
  Algebra,        // table not associative, not a group, ...
  CapExceeded,    // enumeration beyond the configured cap
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) throw Error(kind, what);
}

}  // namespace multinorm
