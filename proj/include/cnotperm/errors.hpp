#pragma once

#include <stdexcept>
#include <string>

namespace cnotperm {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad wire index, non-bijective permutation, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Text that failed to parse. `column` is 1-based and points at the offending character.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t column)
      : InvalidInput(what + " (column " + std::to_string(column) + ")"), column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Wire count outside the range an operation supports (e.g. full BFS for n > 5).
class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

/// Target matrix is not in GL(n,2), so no CNOT circuit realizes it.
class Unrealizable : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search would exceed its configured work budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Input set is not closed under the symmetry it is being grouped by.
class Inconsistent : public Error {
 public:
  using Error::Error;
};

/// Distance-table persistence failures.
class TableError : public Error {
 public:
  enum class Kind { Io, BadMagic, VersionMismatch, SizeMismatch, Corrupt };

  TableError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace cnotperm
