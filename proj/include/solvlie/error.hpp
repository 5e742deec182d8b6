#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace solvlie {

/// Error with a stable machine-readable code ("jacobi_violation",
/// "cap_exceeded", ...) plus a human message. The CLI maps codes to
/// report records and exit status.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
  throw Error(std::move(code), message);
}

}  // namespace solvlie
