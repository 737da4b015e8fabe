#include "decoreq/errors.hpp"

namespace decoreq {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DuplicateLocation: return "DuplicateLocation";
    case ErrorKind::EmptyCarrier: return "EmptyCarrier";
    case ErrorKind::UnknownLocation: return "UnknownLocation";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::LocationClash: return "LocationClash";
    case ErrorKind::SideConditionViolated: return "SideConditionViolated";
    case ErrorKind::InvalidProof: return "InvalidProof";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

} // namespace decoreq
