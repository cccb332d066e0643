// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tflab {

enum class ErrorKind {
  kInvalidArgument,
  kDomainOverflow,
  kResourceLimit,
  kNumericFailure,
  kUnsupportedSymbol,
  kIo,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so the
// command line front end can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::kInvalidArgument, what);
}

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kDomainOverflow: return "domain-overflow";
    case ErrorKind::kResourceLimit: return "resource-limit";
    case ErrorKind::kNumericFailure: return "numeric-failure";
    case ErrorKind::kUnsupportedSymbol: return "unsupported-symbol";
    case ErrorKind::kIo: return "io-error";
  }
  return "unknown";
}

}  // namespace tflab
