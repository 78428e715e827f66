#pragma once

#include <stdexcept>
#include <string>

namespace permtab {

enum class ErrorKind {
  NotABijection,
  NotLexSorted,
  ShapeMismatch,
  NotARecordingTableau,
  DimsTooSmall,
  SizeMismatch,
  GuardExceeded,
  OutOfRange,
  NonIntegerResult,
  DegreeMismatch,
  InvalidArgument,
  Internal,
};

const char *error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &message) {
  throw Error(kind, message);
}

}  // namespace permtab
