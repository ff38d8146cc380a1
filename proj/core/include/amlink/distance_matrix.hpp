#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "amlink/normalize.hpp"

namespace amlink {

/// Absolute tolerance used wherever two distances are compared for equality.
inline constexpr double kDistanceTolerance = 1e-9;

/// Euclidean (L2) distance. Throws DimensionMismatchError on unequal lengths.
double euclidean_distance(std::span<const double> x, std::span<const double> y);

/// Symmetric matrix with a zero diagonal, stored as the condensed
/// row-major upper triangle (n(n-1)/2 entries).
class DistanceMatrix {
public:
  DistanceMatrix() = default;

  /// Pairwise distances between the rows of a row-major n x p coordinate block.
  static DistanceMatrix from_points(std::span<const double> coords, std::size_t n, std::size_t p);

  /// Adopt precomputed condensed entries; validates count and sign.
  static DistanceMatrix from_condensed(std::size_t n, std::vector<double> entries);

  std::size_t size() const noexcept { return n_; }
  std::span<const double> condensed() const noexcept { return entries_; }

  /// d(i, j); d(i, i) == 0.
  double operator()(std::size_t i, std::size_t j) const;

  /// Smallest off-diagonal entry of row i.
  double row_min(std::size_t i) const;

  static std::size_t condensed_index(std::size_t n, std::size_t i, std::size_t j) noexcept;

private:
  DistanceMatrix(std::size_t n, std::vector<double> entries)
      : n_(n), entries_(std::move(entries)) {}

  std::size_t n_ = 0;
  std::vector<double> entries_;
};

/// Throws TooFewPointsError when the dataset has fewer than 2 rows.
DistanceMatrix distance_matrix(const NormalizedDataset& nd);

}  // namespace amlink
