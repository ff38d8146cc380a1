#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace amlink {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidDatasetError : public Error {
public:
  using Error::Error;
};

class TooFewPointsError : public Error {
public:
  TooFewPointsError(std::size_t got, std::size_t needed);
  std::size_t got() const noexcept { return got_; }
  std::size_t needed() const noexcept { return needed_; }

private:
  std::size_t got_;
  std::size_t needed_;
};

class ZeroVarianceError : public Error {
public:
  ZeroVarianceError(std::size_t column, std::string column_name);
  std::size_t column() const noexcept { return column_; }
  const std::string& column_name() const noexcept { return column_name_; }

private:
  std::size_t column_;
  std::string column_name_;
};

class DimensionMismatchError : public Error {
public:
  DimensionMismatchError(std::size_t lhs, std::size_t rhs);
};

class OutOfRangeError : public Error {
public:
  using Error::Error;
};

/// A merge referenced a point that was already consumed at the current depth.
class StaleIndexError : public Error {
public:
  explicit StaleIndexError(std::size_t index);
  std::size_t index() const noexcept { return index_; }

private:
  std::size_t index_;
};

class LeafMismatchError : public Error {
public:
  using Error::Error;
};

/// Malformed delimited table. Row and column are 1-based; 0 means "not applicable".
class ParseError : public Error {
public:
  ParseError(std::size_t row, std::size_t column, std::string reason);
  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& reason() const noexcept { return reason_; }

private:
  std::size_t row_;
  std::size_t column_;
  std::string reason_;
};

/// A trace document does not follow the expected schema.
class SchemaError : public Error {
public:
  using Error::Error;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

}  // namespace amlink
