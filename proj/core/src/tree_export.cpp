#include "amlink/tree_export.hpp"

#include <functional>
#include <vector>

#include "amlink/display.hpp"

namespace amlink {

namespace {

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  out += '"';
  return out;
}

struct GenericNode {
  std::string label;
  std::vector<std::size_t> children;
};

std::string render_dot(const std::vector<GenericNode>& nodes, std::size_t leaf_count) {
  std::string out = "digraph dendrogram {\n";
  out += "  node [shape=plaintext];\n";
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    out += "  n" + std::to_string(id) + " [label=" + quoted(nodes[id].label);
    out += id < leaf_count ? "];\n" : ", shape=ellipse];\n";
  }
  for (std::size_t id = leaf_count; id < nodes.size(); ++id) {
    for (auto child : nodes[id].children) {
      out += "  n" + std::to_string(id) + " -> n" + std::to_string(child) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

std::string render_text(const std::vector<GenericNode>& nodes, std::vector<std::size_t> roots) {
  std::string out;
  std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t id, std::size_t indent) {
    out.append(indent * 2, ' ');
    out += nodes[id].label;
    out += '\n';
    for (auto child : nodes[id].children) {
      visit(child, indent + 1);
    }
  };
  for (auto root : roots) {
    visit(root, 0);
  }
  return out;
}

std::vector<GenericNode> adaptive_nodes(const Dendrogram& tree, bool verbose) {
  std::vector<GenericNode> nodes;
  for (const auto& label : tree.leaf_labels) {
    nodes.push_back({label, {}});
  }
  for (const auto& node : tree.internal_nodes) {
    std::string label = verbose ? "depth " + std::to_string(node.depth) + ", cut-off " +
                                      format_cutoff(node.cutoff)
                                : std::to_string(node.depth) + ":" + format_cutoff(node.cutoff);
    nodes.push_back({std::move(label), node.children});
  }
  return nodes;
}

std::vector<GenericNode> stepwise_nodes(const StepwiseDendrogram& tree, bool verbose) {
  std::vector<GenericNode> nodes;
  for (const auto& label : tree.leaf_labels) {
    nodes.push_back({label, {}});
  }
  std::size_t step = 0;
  for (const auto& merge : tree.merges) {
    ++step;
    std::string label = verbose ? "step " + std::to_string(step) + ", distance " +
                                      format_cutoff(merge.distance)
                                : std::to_string(step) + ":" + format_cutoff(merge.distance);
    nodes.push_back({std::move(label), {merge.left, merge.right}});
  }
  return nodes;
}

std::vector<std::size_t> parentless(const std::vector<GenericNode>& nodes) {
  std::vector<bool> has_parent(nodes.size(), false);
  for (const auto& node : nodes) {
    for (auto child : node.children) {
      has_parent[child] = true;
    }
  }
  std::vector<std::size_t> roots;
  for (std::size_t id = nodes.size(); id-- > 0;) {
    if (!has_parent[id]) {
      roots.push_back(id);
    }
  }
  return roots;
}

}  // namespace

std::string write_dot(const Dendrogram& tree) {
  return render_dot(adaptive_nodes(tree, false), tree.leaf_count());
}

std::string write_dot(const StepwiseDendrogram& tree) {
  return render_dot(stepwise_nodes(tree, false), tree.leaf_count());
}

std::string write_tree_text(const Dendrogram& tree) {
  const auto nodes = adaptive_nodes(tree, true);
  return render_text(nodes, parentless(nodes));
}

std::string write_tree_text(const StepwiseDendrogram& tree) {
  const auto nodes = stepwise_nodes(tree, true);
  return render_text(nodes, parentless(nodes));
}

}  // namespace amlink
