#include "amlink/baseline.hpp"

#include <algorithm>
#include <limits>

#include "amlink/distance_matrix.hpp"
#include "amlink/errors.hpp"

namespace amlink {

std::string_view to_string(LinkageMethod method) noexcept {
  switch (method) {
    case LinkageMethod::Single:
      return "single";
    case LinkageMethod::Complete:
      return "complete";
    case LinkageMethod::Average:
      return "average";
    case LinkageMethod::Centroid:
      return "centroid";
  }
  return "unknown";
}

LinkageMethod linkage_from_string(std::string_view text) {
  for (auto method : {LinkageMethod::Single, LinkageMethod::Complete, LinkageMethod::Average,
                      LinkageMethod::Centroid}) {
    if (text == to_string(method)) {
      return method;
    }
  }
  throw Error("unknown linkage method '" + std::string(text) + "'");
}

namespace {

struct Cluster {
  std::size_t node = 0;
  std::vector<std::size_t> leaves;
  std::vector<double> centroid;
  bool active = true;
};

}  // namespace

StepwiseDendrogram stepwise_cluster(const NormalizedDataset& nd, LinkageMethod method,
                                    std::optional<double> stop_threshold) {
  const std::size_t n = nd.size();
  const std::size_t p = nd.dimensions();
  if (n < 2) {
    throw TooFewPointsError(n, 2);
  }

  // Slot i always holds the cluster whose first leaf is i, so scanning
  // slots in order visits pairs in (first leaf, first leaf) order.
  std::vector<Cluster> slots(n);
  std::vector<double> dist(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = nd.row(i);
    slots[i] = Cluster{i, {i}, std::vector<double>(row.begin(), row.end()), true};
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      dist[i * n + j] = dist[j * n + i] = euclidean_distance(nd.row(i), nd.row(j));
    }
  }

  StepwiseDendrogram tree{method, nd.labels(), {}};
  tree.merges.reserve(n - 1);
  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::size_t best_a = n;
    std::size_t best_b = n;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < n; ++a) {
      if (!slots[a].active) {
        continue;
      }
      for (std::size_t b = a + 1; b < n; ++b) {
        if (slots[b].active && dist[a * n + b] < best - kDistanceTolerance) {
          best = dist[a * n + b];
          best_a = a;
          best_b = b;
        }
      }
    }
    if (stop_threshold && best > *stop_threshold) {
      break;
    }

    auto& keep = slots[best_a];
    auto& gone = slots[best_b];
    const auto size_a = static_cast<double>(keep.leaves.size());
    const auto size_b = static_cast<double>(gone.leaves.size());

    StepwiseMerge merge{keep.node, gone.node, best, {}};
    merge.leaves = keep.leaves;
    merge.leaves.insert(merge.leaves.end(), gone.leaves.begin(), gone.leaves.end());
    std::sort(merge.leaves.begin(), merge.leaves.end());

    for (std::size_t c = 0; c < p; ++c) {
      keep.centroid[c] = (size_a * keep.centroid[c] + size_b * gone.centroid[c]) / (size_a + size_b);
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (!slots[k].active || k == best_a || k == best_b) {
        continue;
      }
      const double dak = dist[best_a * n + k];
      const double dbk = dist[best_b * n + k];
      double updated = 0.0;
      switch (method) {
        case LinkageMethod::Single:
          updated = std::min(dak, dbk);
          break;
        case LinkageMethod::Complete:
          updated = std::max(dak, dbk);
          break;
        case LinkageMethod::Average:
          updated = (size_a * dak + size_b * dbk) / (size_a + size_b);
          break;
        case LinkageMethod::Centroid:
          updated = euclidean_distance(keep.centroid, slots[k].centroid);
          break;
      }
      dist[best_a * n + k] = dist[k * n + best_a] = updated;
    }

    keep.leaves = merge.leaves;
    keep.node = n + step;
    gone.active = false;
    tree.merges.push_back(std::move(merge));
  }
  return tree;
}

}  // namespace amlink
