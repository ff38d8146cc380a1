#include "amlink/dataset.hpp"

#include <cmath>
#include <unordered_set>

#include "amlink/errors.hpp"

namespace amlink {

Dataset::Dataset(std::vector<std::string> labels, std::vector<std::string> column_names,
                 std::vector<double> values)
    : labels_(std::move(labels)),
      column_names_(std::move(column_names)),
      values_(std::move(values)) {
  if (labels_.empty()) {
    throw InvalidDatasetError("dataset has no rows");
  }
  if (column_names_.empty()) {
    throw InvalidDatasetError("dataset has no descriptor columns");
  }
  if (values_.size() != labels_.size() * column_names_.size()) {
    throw InvalidDatasetError("value count " + std::to_string(values_.size()) +
                              " does not match " + std::to_string(labels_.size()) + " x " +
                              std::to_string(column_names_.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels_) {
    if (label.empty()) {
      throw InvalidDatasetError("empty label");
    }
    if (!seen.insert(label).second) {
      throw InvalidDatasetError("duplicate label '" + label + "'");
    }
  }
  for (std::size_t idx = 0; idx < values_.size(); ++idx) {
    if (!std::isfinite(values_[idx])) {
      throw InvalidDatasetError("non-finite value for '" + labels_[idx / column_names_.size()] +
                                "', column '" + column_names_[idx % column_names_.size()] + "'");
    }
  }
}

std::span<const double> Dataset::row(std::size_t i) const {
  if (i >= size()) {
    throw OutOfRangeError("row " + std::to_string(i) + " out of range");
  }
  return std::span<const double>(values_).subspan(i * dimensions(), dimensions());
}

Dataset Dataset::select_columns(std::span<const std::size_t> columns) const {
  std::vector<std::string> names;
  names.reserve(columns.size());
  for (auto k : columns) {
    if (k >= dimensions()) {
      throw OutOfRangeError("column " + std::to_string(k) + " out of range");
    }
    names.push_back(column_names_[k]);
  }
  std::vector<double> picked;
  picked.reserve(size() * columns.size());
  for (std::size_t i = 0; i < size(); ++i) {
    for (auto k : columns) {
      picked.push_back(values_[i * dimensions() + k]);
    }
  }
  return Dataset(labels_, std::move(names), std::move(picked));
}

}  // namespace amlink
