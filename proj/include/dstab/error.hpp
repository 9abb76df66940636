#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dstab {

enum class ErrorKind {
  EmptyInput,
  NotOnBoundary,
  DegenerateBasis,
  PivotContainsCenter,
  ZeroVector,
  HypothesisViolation,
  SamplerExhausted,
  GenerationExhausted,
  Parse,
  Io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Thrown by the disk-file readers. `line()` is 1-based; 0 when the error is
/// not tied to a particular line (structured input).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::Parse, what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dstab
