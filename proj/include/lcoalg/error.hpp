#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcoalg {

enum class ErrorKind {
  NotMonomial,
  ZeroInverse,
  ZeroBase,
  BasisMismatch,
  LegOutOfRange,
  BadPermutation,
  TooLarge,
  VertexMismatch,
  MissingCounit,
  NonRationalScalars,
  NotCoassociative,
  MissingUnit,
  NotGroupLike,
  PreconditionFailed,
  IndexOutOfRange,
  SizeMismatch,
  BudgetExceeded,
  ParseError,
  UnknownLabel,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure carrying a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column),
        detail_(what) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  /// The message without the position prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

}  // namespace lcoalg
