#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "amlink/baseline.hpp"
#include "amlink/dendrogram.hpp"

namespace amlink {

struct CompactnessReport {
  LinkageMethod method = LinkageMethod::Average;
  std::size_t leaves = 0;
  std::size_t adaptive_levels = 0;
  std::size_t stepwise_steps = 0;
  std::size_t adaptive_max_arity = 0;
  std::size_t stepwise_max_arity = 0;
  std::vector<std::size_t> adaptive_groups_per_level;

  bool adaptive_more_compact() const noexcept { return adaptive_levels < stepwise_steps; }
};

/// Throws LeafMismatchError when the two trees cover different label sets.
CompactnessReport compare_compactness(const Dendrogram& adaptive,
                                      const StepwiseDendrogram& stepwise);

/// Plain-text report, first line "adaptive: L levels, <method>-linkage: S steps".
std::string format_report(const CompactnessReport& report);

}  // namespace amlink
