#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace amlink {

/// Labelled n x p table of raw descriptor values, stored row-major.
///
/// Construction validates the shape: n >= 1, p >= 1, every value finite,
/// labels non-empty and unique, one name per column.
class Dataset {
public:
  Dataset(std::vector<std::string> labels, std::vector<std::string> column_names,
          std::vector<double> values);

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t dimensions() const noexcept { return column_names_.size(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::string>& column_names() const noexcept { return column_names_; }
  std::span<const double> values() const noexcept { return values_; }

  std::span<const double> row(std::size_t i) const;
  double value(std::size_t i, std::size_t k) const { return row(i)[k]; }

  /// New dataset keeping only the given columns, in the given order.
  Dataset select_columns(std::span<const std::size_t> columns) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

private:
  std::vector<std::string> labels_;
  std::vector<std::string> column_names_;
  std::vector<double> values_;
};

}  // namespace amlink
