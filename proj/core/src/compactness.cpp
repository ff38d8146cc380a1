#include "amlink/compactness.hpp"

#include <algorithm>
#include <sstream>

#include "amlink/errors.hpp"

namespace amlink {

CompactnessReport compare_compactness(const Dendrogram& adaptive,
                                      const StepwiseDendrogram& stepwise) {
  auto a = adaptive.leaf_labels;
  auto b = stepwise.leaf_labels;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) {
    throw LeafMismatchError("adaptive and stepwise trees cover different leaves");
  }

  CompactnessReport report;
  report.method = stepwise.method;
  report.leaves = adaptive.leaf_count();
  report.adaptive_levels = adaptive.levels();
  report.stepwise_steps = stepwise.steps();
  report.stepwise_max_arity = stepwise.merges.empty() ? 0 : 2;
  for (const auto& node : adaptive.internal_nodes) {
    report.adaptive_max_arity = std::max(report.adaptive_max_arity, node.children.size());
  }
  for (const auto& record : adaptive.trace) {
    report.adaptive_groups_per_level.push_back(record.groups.size());
  }
  return report;
}

std::string format_report(const CompactnessReport& report) {
  std::ostringstream out;
  out << "adaptive: " << report.adaptive_levels << " levels, " << to_string(report.method)
      << "-linkage: " << report.stepwise_steps << " steps\n";
  out << "leaves: " << report.leaves << "\n";
  out << "levels: " << report.adaptive_levels << " vs " << report.stepwise_steps << "\n";
  out << "max merge arity: adaptive " << report.adaptive_max_arity << ", stepwise "
      << report.stepwise_max_arity << "\n";
  out << "groups per adaptive level:";
  for (auto count : report.adaptive_groups_per_level) {
    out << ' ' << count;
  }
  out << "\n";
  if (report.adaptive_more_compact()) {
    out << "verdict: adaptive tree is more compact\n";
  } else if (report.adaptive_levels == report.stepwise_steps) {
    out << "verdict: equal\n";
  } else {
    out << "verdict: stepwise tree is more compact\n";
  }
  return out.str();
}

}  // namespace amlink
