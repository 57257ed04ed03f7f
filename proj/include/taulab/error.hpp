#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace taulab {

enum class ErrorKind {
  OrderMismatch,
  EmptyInterval,
  UnsupportedOrder,
  EmptyTrace,
  EmptyFamily,
  UncertifiedLimit,
  OutOfSandwich,
  SearchExhausted,
  SizeTooLarge,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based column into the offending text.
class ParseError : public Error {
 public:
  ParseError(std::size_t column, const std::string& what)
      : Error(ErrorKind::ParseError, "column " + std::to_string(column) + ": " + what),
        column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::EmptyInterval: return "EmptyInterval";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::EmptyTrace: return "EmptyTrace";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::UncertifiedLimit: return "UncertifiedLimit";
    case ErrorKind::OutOfSandwich: return "OutOfSandwich";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::SizeTooLarge: return "SizeTooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace taulab
