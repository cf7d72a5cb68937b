#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gpss {

// Thrown when an operation's input violates its contract. `code` is a stable
// machine-readable tag (e.g. "identical-points", "not-dense", "overflow").
class PreconditionError : public std::runtime_error {
public:
  PreconditionError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

// Thrown by the file readers; carries the 1-based line number of the offending row.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string source, int line, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  int line() const noexcept { return line_; }

private:
  std::string source_;
  int line_;
};

}  // namespace gpss
