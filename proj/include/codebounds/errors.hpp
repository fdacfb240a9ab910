#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace codebounds {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// min_distance of a code with fewer than two words.
class UndefinedDistance : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  MalformedHeader,
  MalformedRow,
  SymbolOutOfRange,
  DuplicateWord,
  LengthMismatch,
  RowCount,
};

const char* to_string(ParseErrorKind kind);

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

  [[nodiscard]] ParseErrorKind kind() const noexcept { return kind_; }
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

// A search or scan ran out of its node/time/size budget. Results are never
// silently truncated; `partial` carries how many results were found so far.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t partial) : Error(what), partial_(partial) {}
  [[nodiscard]] std::size_t partial() const noexcept { return partial_; }

 private:
  std::size_t partial_;
};

// A combinatorial object does not have the structure an operation requires.
class StructureError : public Error {
 public:
  using Error::Error;
};

class NetError : public Error {
 public:
  using Error::Error;
};

}  // namespace codebounds
