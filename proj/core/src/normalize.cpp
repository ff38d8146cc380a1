#include "amlink/normalize.hpp"

#include <cmath>

#include "amlink/errors.hpp"

namespace amlink {

std::string_view to_string(SdMode mode) noexcept {
  return mode == SdMode::Sample ? "sample" : "population";
}

SdMode sd_mode_from_string(std::string_view text) {
  if (text == "sample") {
    return SdMode::Sample;
  }
  if (text == "population") {
    return SdMode::Population;
  }
  throw Error("unknown sd mode '" + std::string(text) + "' (expected sample|population)");
}

NormalizedDataset::NormalizedDataset(std::vector<std::string> labels,
                                     std::vector<std::string> column_names,
                                     std::vector<double> coords, NormalizationStats stats,
                                     bool standardized)
    : labels_(std::move(labels)),
      column_names_(std::move(column_names)),
      coords_(std::move(coords)),
      stats_(std::move(stats)),
      standardized_(standardized) {
  if (coords_.size() != labels_.size() * column_names_.size()) {
    throw InvalidDatasetError("coordinate count does not match labels x columns");
  }
  if (stats_.means.size() != column_names_.size() || stats_.sds.size() != column_names_.size()) {
    throw InvalidDatasetError("normalization stats do not match column count");
  }
}

std::span<const double> NormalizedDataset::row(std::size_t i) const {
  if (i >= size()) {
    throw OutOfRangeError("row " + std::to_string(i) + " out of range");
  }
  return std::span<const double>(coords_).subspan(i * dimensions(), dimensions());
}

NormalizationStats column_stats(const Dataset& data, SdMode mode) {
  const std::size_t n = data.size();
  const std::size_t p = data.dimensions();
  if (n < 2) {
    throw TooFewPointsError(n, 2);
  }
  NormalizationStats stats{std::vector<double>(p, 0.0), std::vector<double>(p, 0.0), mode};
  const auto denom = static_cast<double>(mode == SdMode::Sample ? n - 1 : n);
  for (std::size_t k = 0; k < p; ++k) {
    double sum = 0.0;
    bool constant = true;
    const double first = data.value(0, k);
    for (std::size_t i = 0; i < n; ++i) {
      sum += data.value(i, k);
      constant = constant && data.value(i, k) == first;
    }
    if (constant) {
      throw ZeroVarianceError(k, data.column_names()[k]);
    }
    const double mean = sum / static_cast<double>(n);
    double squares = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double dev = data.value(i, k) - mean;
      squares += dev * dev;
    }
    const double sd = std::sqrt(squares / denom);
    if (!(sd > 0.0) || !std::isfinite(sd)) {
      throw ZeroVarianceError(k, data.column_names()[k]);
    }
    stats.means[k] = mean;
    stats.sds[k] = sd;
  }
  return stats;
}

NormalizedDataset normalize(const Dataset& data, SdMode mode) {
  auto stats = column_stats(data, mode);
  const std::size_t p = data.dimensions();
  std::vector<double> coords(data.values().begin(), data.values().end());
  for (std::size_t idx = 0; idx < coords.size(); ++idx) {
    const std::size_t k = idx % p;
    coords[idx] = (coords[idx] - stats.means[k]) / stats.sds[k];
  }
  return NormalizedDataset(data.labels(), data.column_names(), std::move(coords), std::move(stats),
                           true);
}

NormalizedDataset raw_coordinates(const Dataset& data) {
  const std::size_t p = data.dimensions();
  NormalizationStats identity{std::vector<double>(p, 0.0), std::vector<double>(p, 1.0),
                              SdMode::Sample};
  return NormalizedDataset(data.labels(), data.column_names(),
                           std::vector<double>(data.values().begin(), data.values().end()),
                           std::move(identity), false);
}

}  // namespace amlink
