#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace amlink {

/// One iteration of the adaptive loop: the cut-off used and every group
/// merged at that depth, each group given as original leaf labels in
/// dataset order. Groups are ordered by their first leaf.
struct DepthRecord {
  int depth = 0;
  double cutoff = 0.0;
  std::vector<std::vector<std::string>> groups;

  friend bool operator==(const DepthRecord&, const DepthRecord&) = default;
};

/// Internal node. Children are node ids: ids below the leaf count are
/// leaves, the rest index `Dendrogram::internal_nodes` offset by the leaf count.
struct TreeNode {
  std::vector<std::size_t> children;
  int depth = 0;
  double cutoff = 0.0;
  std::vector<std::size_t> leaves;  // sorted original indices

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

struct Dendrogram {
  std::vector<std::string> leaf_labels;
  std::vector<TreeNode> internal_nodes;
  std::vector<DepthRecord> trace;

  std::size_t leaf_count() const noexcept { return leaf_labels.size(); }
  std::size_t node_count() const noexcept { return leaf_labels.size() + internal_nodes.size(); }
  bool is_leaf(std::size_t id) const noexcept { return id < leaf_labels.size(); }
  const TreeNode& internal(std::size_t id) const { return internal_nodes.at(id - leaf_count()); }
  /// The last node created; the single leaf for a one-point tree.
  std::size_t root() const noexcept { return node_count() - 1; }
  /// Number of adaptive iterations (length of the trace).
  std::size_t levels() const noexcept { return trace.size(); }

  friend bool operator==(const Dendrogram&, const Dendrogram&) = default;
};

/// Structural checks: each leaf under exactly one parent, root covers all
/// leaves, parent depth above every child depth, trace groups disjoint per
/// depth. Throws InvariantViolation.
void validate(const Dendrogram& tree);

}  // namespace amlink
