#pragma once

#include <stdexcept>
#include <string>

namespace factorlab {

enum class ErrorCode {
  parse_error,       // malformed JSON or rational text
  invalid_argument,  // well-formed but out-of-domain input
  not_member,        // argument does not lie in the monoid / domain
  unsupported,       // input outside the fragment an operation decides
  unknown_id,        // scenario registry lookup failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline Error parse_error(const std::string& message) { return Error(ErrorCode::parse_error, message); }

inline Error invalid_argument(const std::string& message) {
  return Error(ErrorCode::invalid_argument, message);
}

}  // namespace factorlab
