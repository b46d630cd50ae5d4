#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace moddeg {

/// Error with a stable machine-readable code, surfaced verbatim in the CLI's
/// JSON error output.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

  /// True for failures of a theorem-backed assertion (as opposed to bad
  /// input); the CLI maps these to exit code 2.
  bool mathematical() const {
    return code_ == "gin-disagreement" || code_ == "gin-not-borel" ||
           code_ == "macaulay-consistency" || code_ == "bound-violation" ||
           code_ == "invariant";
  }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code,
                              const std::string& message) {
  throw Error(code, message);
}

}  // namespace moddeg
