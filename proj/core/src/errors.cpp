#include "amlink/errors.hpp"

namespace amlink {

TooFewPointsError::TooFewPointsError(std::size_t got, std::size_t needed)
    : Error("too few points: got " + std::to_string(got) + ", need at least " +
            std::to_string(needed)),
      got_(got),
      needed_(needed) {}

ZeroVarianceError::ZeroVarianceError(std::size_t column, std::string column_name)
    : Error("column " + std::to_string(column + 1) + " ('" + column_name +
            "') has zero variance"),
      column_(column),
      column_name_(std::move(column_name)) {}

DimensionMismatchError::DimensionMismatchError(std::size_t lhs, std::size_t rhs)
    : Error("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}

StaleIndexError::StaleIndexError(std::size_t index)
    : Error("point " + std::to_string(index) + " was already merged at this depth"),
      index_(index) {}

namespace {

std::string describe_cell(std::size_t row, std::size_t column, const std::string& reason) {
  std::string where;
  if (row != 0) {
    where += "row " + std::to_string(row);
  }
  if (column != 0) {
    where += (where.empty() ? "" : ", ") + std::string("column ") + std::to_string(column);
  }
  return where.empty() ? reason : where + ": " + reason;
}

}  // namespace

ParseError::ParseError(std::size_t row, std::size_t column, std::string reason)
    : Error(describe_cell(row, column, reason)),
      row_(row),
      column_(column),
      reason_(std::move(reason)) {}

}  // namespace amlink
