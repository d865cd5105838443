#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tilekit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(int lhs, int rhs)
      : Error("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class BadPosition : public Error {
 public:
  BadPosition(int position, int dim)
      : Error("position " + std::to_string(position) + " out of range for dimension " +
              std::to_string(dim)) {}
};

class DuplicateWord : public Error {
 public:
  explicit DuplicateWord(const std::string& word) : Error("duplicate word: " + word) {}
};

class NotPolybox : public Error {
 public:
  NotPolybox() : Error("code is not a polybox code") {}
};

class NotTilingCode : public Error {
 public:
  NotTilingCode() : Error("code is not a cube tiling code") {}
};

class NotTwinPair : public Error {
 public:
  NotTwinPair() : Error("words do not form a twin pair") {}
};

class NoStarAtPosition : public Error {
 public:
  explicit NoStarAtPosition(int position)
      : Error("word has no star at position " + std::to_string(position)) {}
};

class EmptySupply : public Error {
 public:
  EmptySupply() : Error("empty letter supply") {}
};

class BlocksNotEquivalent : public Error {
 public:
  explicit BlocksNotEquivalent(std::size_t block)
      : Error("blocks " + std::to_string(block) + " are not equivalent"), block_(block) {}
  std::size_t block() const noexcept { return block_; }

 private:
  std::size_t block_;
};

class AlphabetTooSmall : public Error {
 public:
  AlphabetTooSmall(int needed, int given)
      : Error("alphabet of " + std::to_string(given) + " pairs is smaller than the " +
              std::to_string(needed) + " pairs used") {}
};

class ShapeMismatch : public Error {
 public:
  ShapeMismatch() : Error("matrix profiles have different shapes") {}
};

class IncompleteInput : public Error {
 public:
  explicit IncompleteInput(const std::string& what) : Error(what) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::size_t budget)
      : Error("search budget of " + std::to_string(budget) + " codes exhausted") {}
};

/// Text-format error; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace tilekit
