#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amlink/normalize.hpp"

namespace amlink {

/// Classical one-merge-per-step linkage rules.
enum class LinkageMethod {
  Single,    // min pairwise distance between clusters
  Complete,  // max pairwise distance
  Average,   // unweighted mean over cross pairs (UPGMA)
  Centroid,  // distance between cluster means (UPGMC); merge heights may invert
};

std::string_view to_string(LinkageMethod method) noexcept;
LinkageMethod linkage_from_string(std::string_view text);

struct StepwiseMerge {
  std::size_t left = 0;   // node ids, as in Dendrogram
  std::size_t right = 0;
  double distance = 0.0;
  std::vector<std::size_t> leaves;  // sorted original indices of the merged cluster

  friend bool operator==(const StepwiseMerge&, const StepwiseMerge&) = default;
};

/// Binary merge history. Merge k creates node id leaf_count() + k.
struct StepwiseDendrogram {
  LinkageMethod method = LinkageMethod::Average;
  std::vector<std::string> leaf_labels;
  std::vector<StepwiseMerge> merges;

  std::size_t leaf_count() const noexcept { return leaf_labels.size(); }
  std::size_t steps() const noexcept { return merges.size(); }
  /// False when a stop threshold left more than one cluster.
  bool complete() const noexcept { return merges.size() + 1 == leaf_labels.size(); }

  friend bool operator==(const StepwiseDendrogram&, const StepwiseDendrogram&) = default;
};

/// Repeatedly merge the closest pair of clusters. Near-ties (within
/// kDistanceTolerance) go to the pair with the lexicographically smallest
/// (first leaf, first leaf). With a stop threshold, merging ends once the
/// closest pair is farther apart than the threshold.
StepwiseDendrogram stepwise_cluster(const NormalizedDataset& nd, LinkageMethod method,
                                    std::optional<double> stop_threshold = std::nullopt);

}  // namespace amlink
