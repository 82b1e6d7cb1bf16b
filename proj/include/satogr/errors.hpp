#pragma once

#include <stdexcept>
#include <string>

namespace satogr {

enum class ErrorKind { parse, precondition, precision, internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Malformed input: bad JSON, unknown field, non-canonical encodings.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::parse, what) {}
};

// A mathematical precondition does not hold (non-unit, ring mismatch, point outside a chart).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ErrorKind::precondition, what) {}
};

// The requested quantity is not determined by the available truncation window.
class PrecisionError : public Error {
 public:
  explicit PrecisionError(const std::string& what) : Error(ErrorKind::precision, what) {}
};

}  // namespace satogr
