#include "amlink/dendrogram.hpp"

#include <set>
#include <string>

#include "amlink/errors.hpp"

namespace amlink {

void validate(const Dendrogram& tree) {
  const std::size_t n = tree.leaf_count();
  if (n == 0) {
    throw InvariantViolation("dendrogram has no leaves");
  }
  std::vector<int> parents(tree.node_count(), 0);
  std::vector<int> node_depth(tree.node_count(), 0);
  for (std::size_t k = 0; k < tree.internal_nodes.size(); ++k) {
    const auto& node = tree.internal_nodes[k];
    const std::size_t id = n + k;
    if (node.children.size() < 2) {
      throw InvariantViolation("internal node " + std::to_string(id) + " has fewer than 2 children");
    }
    std::set<std::size_t> covered;
    for (auto child : node.children) {
      if (child >= id) {
        throw InvariantViolation("node " + std::to_string(id) + " references a later node");
      }
      if (++parents[child] > 1) {
        throw InvariantViolation("node " + std::to_string(child) + " has two parents");
      }
      if (node_depth[child] >= node.depth) {
        throw InvariantViolation("node " + std::to_string(id) + " is not deeper than its child");
      }
      if (tree.is_leaf(child)) {
        covered.insert(child);
      } else {
        const auto& leaves = tree.internal(child).leaves;
        covered.insert(leaves.begin(), leaves.end());
      }
    }
    if (std::vector<std::size_t>(covered.begin(), covered.end()) != node.leaves) {
      throw InvariantViolation("node " + std::to_string(id) + " leaf set is inconsistent");
    }
    node_depth[id] = node.depth;
  }
  for (std::size_t id = 0; id + 1 < tree.node_count(); ++id) {
    if (parents[id] != 1) {
      throw InvariantViolation("node " + std::to_string(id) + " is detached from the tree");
    }
  }
  if (!tree.is_leaf(tree.root()) && tree.internal(tree.root()).leaves.size() != n) {
    throw InvariantViolation("root does not cover every leaf");
  }
  for (const auto& record : tree.trace) {
    if (record.groups.empty()) {
      throw InvariantViolation("depth " + std::to_string(record.depth) + " merged nothing");
    }
    std::set<std::string> seen;
    for (const auto& group : record.groups) {
      for (const auto& label : group) {
        if (!seen.insert(label).second) {
          throw InvariantViolation("depth " + std::to_string(record.depth) +
                                   " has overlapping groups");
        }
      }
    }
  }
}

}  // namespace amlink
