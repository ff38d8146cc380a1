#include "amlink/distance_matrix.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "amlink/errors.hpp"

namespace amlink {

double euclidean_distance(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw DimensionMismatchError(x.size(), y.size());
  }
  double squares = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double diff = x[k] - y[k];
    squares += diff * diff;
  }
  return std::sqrt(squares);
}

std::size_t DistanceMatrix::condensed_index(std::size_t n, std::size_t i, std::size_t j) noexcept {
  // requires i < j < n
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

DistanceMatrix DistanceMatrix::from_points(std::span<const double> coords, std::size_t n,
                                           std::size_t p) {
  if (coords.size() != n * p) {
    throw DimensionMismatchError(coords.size(), n * p);
  }
  std::vector<double> entries;
  entries.reserve(n * (n - (n > 0 ? 1 : 0)) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    const auto xi = coords.subspan(i * p, p);
    for (std::size_t j = i + 1; j < n; ++j) {
      entries.push_back(euclidean_distance(xi, coords.subspan(j * p, p)));
    }
  }
  return DistanceMatrix(n, std::move(entries));
}

DistanceMatrix DistanceMatrix::from_condensed(std::size_t n, std::vector<double> entries) {
  if (entries.size() != n * (n - (n > 0 ? 1 : 0)) / 2) {
    throw DimensionMismatchError(entries.size(), n * (n - (n > 0 ? 1 : 0)) / 2);
  }
  for (double d : entries) {
    if (!(d >= 0.0) || !std::isfinite(d)) {
      throw InvalidDatasetError("distance entries must be finite and non-negative");
    }
  }
  return DistanceMatrix(n, std::move(entries));
}

double DistanceMatrix::operator()(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) {
    throw OutOfRangeError("distance index (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") out of range for n = " + std::to_string(n_));
  }
  if (i == j) {
    return 0.0;
  }
  return i < j ? entries_[condensed_index(n_, i, j)] : entries_[condensed_index(n_, j, i)];
}

double DistanceMatrix::row_min(std::size_t i) const {
  if (n_ < 2) {
    throw TooFewPointsError(n_, 2);
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n_; ++j) {
    if (j != i) {
      best = std::min(best, (*this)(i, j));
    }
  }
  return best;
}

DistanceMatrix distance_matrix(const NormalizedDataset& nd) {
  if (nd.size() < 2) {
    throw TooFewPointsError(nd.size(), 2);
  }
  return DistanceMatrix::from_points(nd.coords(), nd.size(), nd.dimensions());
}

}  // namespace amlink
