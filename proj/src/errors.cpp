#include "errors.hpp"

namespace permtab {

const char *error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotABijection: return "NotABijection";
    case ErrorKind::NotLexSorted: return "NotLexSorted";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotARecordingTableau: return "NotARecordingTableau";
    case ErrorKind::DimsTooSmall: return "DimsTooSmall";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::GuardExceeded: return "GuardExceeded";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NonIntegerResult: return "NonIntegerResult";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace permtab
