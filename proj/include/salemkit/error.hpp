#pragma once

#include <stdexcept>
#include <string>

namespace salemkit {

enum class ErrorKind {
  kInput,         // malformed or out-of-contract input
  kPrecondition,  // well-formed input that fails an operation's precondition
  kInternal,      // an invariant the mathematics guarantees was violated
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_input(const std::string& what) { throw Error(ErrorKind::kInput, what); }
[[noreturn]] inline void throw_precondition(const std::string& what) {
  throw Error(ErrorKind::kPrecondition, what);
}
[[noreturn]] inline void throw_internal(const std::string& what) { throw Error(ErrorKind::kInternal, what); }

}  // namespace salemkit
