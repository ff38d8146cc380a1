#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "amlink/dataset.hpp"

namespace amlink {

/// Denominator used for the per-column standard deviation.
enum class SdMode {
  Sample,      ///< divide by n - 1
  Population,  ///< divide by n
};

std::string_view to_string(SdMode mode) noexcept;
SdMode sd_mode_from_string(std::string_view text);

struct NormalizationStats {
  std::vector<double> means;
  std::vector<double> sds;  // all > 0
  SdMode mode = SdMode::Sample;

  friend bool operator==(const NormalizationStats&, const NormalizationStats&) = default;
};

/// Per-column z-scored coordinates of a dataset.
///
/// When `standardized()` is false the coordinates are the raw values
/// (identity stats: means 0, sds 1), used for pre-scaled inputs.
class NormalizedDataset {
public:
  NormalizedDataset(std::vector<std::string> labels, std::vector<std::string> column_names,
                    std::vector<double> coords, NormalizationStats stats, bool standardized);

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t dimensions() const noexcept { return column_names_.size(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::string>& column_names() const noexcept { return column_names_; }
  std::span<const double> coords() const noexcept { return coords_; }
  std::span<const double> row(std::size_t i) const;
  const NormalizationStats& stats() const noexcept { return stats_; }
  bool standardized() const noexcept { return standardized_; }

private:
  std::vector<std::string> labels_;
  std::vector<std::string> column_names_;
  std::vector<double> coords_;
  NormalizationStats stats_;
  bool standardized_;
};

/// Column means and standard deviations (two-pass, sequential summation).
/// Throws TooFewPointsError for n < 2 and ZeroVarianceError for a constant column.
NormalizationStats column_stats(const Dataset& data, SdMode mode);

/// z-score every column: (value - mean) / sd.
NormalizedDataset normalize(const Dataset& data, SdMode mode = SdMode::Sample);

/// Use raw values as coordinates, skipping standardization.
NormalizedDataset raw_coordinates(const Dataset& data);

}  // namespace amlink
