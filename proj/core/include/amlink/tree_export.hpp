#pragma once

#include <string>

#include "amlink/baseline.hpp"
#include "amlink/dendrogram.hpp"

namespace amlink {

/// Graphviz digraph: one node per leaf (labelled by the dataset label), one
/// per merge (labelled "depth:cut-off"), edges parent -> child. Nodes are
/// emitted in id order, so output is deterministic.
std::string write_dot(const Dendrogram& tree);

/// Same for a stepwise tree; merge nodes are labelled "step:distance".
std::string write_dot(const StepwiseDendrogram& tree);

/// Indented text rendering, root first.
std::string write_tree_text(const Dendrogram& tree);
std::string write_tree_text(const StepwiseDendrogram& tree);

}  // namespace amlink
