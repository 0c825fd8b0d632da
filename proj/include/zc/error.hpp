#pragma once

#include <stdexcept>
#include <string>

namespace zc {

/// Base of every domain error raised by the library. `code()` is a stable,
/// machine-readable identifier (e.g. "TangentLineInSurface") that the CLI
/// forwards in its error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Malformed input: bad JSON, wrong arity, invalid coefficient strings.
class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& message) : Error("InvalidInput", message) {}
};

}  // namespace zc
