#pragma once

#include <stdexcept>
#include <string>

namespace gentlekit {

enum class ErrorKind { Parse, Validation, Walk, Bound, Internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

inline Error parse_error(const std::string& msg) { return Error(ErrorKind::Parse, "SyntaxError", msg); }

inline Error validation_error(const std::string& code, const std::string& msg) {
  return Error(ErrorKind::Validation, code, msg);
}

inline Error walk_error(const std::string& code, const std::string& msg) {
  return Error(ErrorKind::Walk, code, msg);
}

inline Error internal_mismatch(const std::string& msg) {
  return Error(ErrorKind::Internal, "InternalMismatch", msg);
}

}  // namespace gentlekit
