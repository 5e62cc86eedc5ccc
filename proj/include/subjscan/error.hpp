#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subjscan {

enum class ErrorCode {
  UnbalancedBrackets,
  EmptyConstituent,
  MalformedConstituent,
  NotAnNP,
  EmptyInflectionSet,
  DegenerateMargin,
  ZeroDenominator,
  RootNotFound,
  ConfigError,
};

std::string_view error_code_name(ErrorCode code);

// Every failure the library reports carries one of the codes above; the CLI
// maps them onto process exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the bracket parser; offset is a byte offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t offset, const std::string& message)
      : Error(code, message + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace subjscan
