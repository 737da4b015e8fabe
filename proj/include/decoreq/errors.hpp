#pragma once

#include <stdexcept>
#include <string>

namespace decoreq {

enum class ErrorKind {
  DuplicateLocation,
  EmptyCarrier,
  UnknownLocation,
  TypeMismatch,
  ShapeMismatch,
  LocationClash,
  SideConditionViolated,
  InvalidProof,
  ParseError,
};

const char* to_string(ErrorKind k);

/// Single exception type for all construction/derivation failures; the
/// kind discriminates, the message carries the specifics.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind),
        message_(std::move(message)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& message() const { return message_; }

private:
  ErrorKind kind_;
  std::string message_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

} // namespace decoreq
