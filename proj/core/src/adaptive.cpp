#include "amlink/adaptive.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "amlink/errors.hpp"

namespace amlink {

namespace {

ClusterState make_state(int depth, std::size_t dimensions, std::vector<PseudoPoint> points,
                        std::size_t next_id) {
  std::sort(points.begin(), points.end(), [](const PseudoPoint& a, const PseudoPoint& b) {
    return a.leaves.front() < b.leaves.front();
  });
  std::vector<double> coords;
  coords.reserve(points.size() * dimensions);
  for (const auto& pt : points) {
    coords.insert(coords.end(), pt.coords.begin(), pt.coords.end());
  }
  auto matrix = DistanceMatrix::from_points(coords, points.size(), dimensions);
  return ClusterState{depth, dimensions, std::move(points), std::move(matrix), next_id};
}

bool prefix_matches(const Neighborhood& nb, std::size_t v, const std::vector<std::size_t>& sorted) {
  if (nb.size() < v) {
    return false;
  }
  std::vector<std::size_t> prefix(nb.members.begin(), nb.members.begin() + static_cast<long>(v));
  std::sort(prefix.begin(), prefix.end());
  return prefix == sorted;
}

}  // namespace

ClusterState initial_state(const NormalizedDataset& nd) {
  if (nd.size() == 0) {
    throw TooFewPointsError(0, 1);
  }
  std::vector<PseudoPoint> points;
  points.reserve(nd.size());
  for (std::size_t i = 0; i < nd.size(); ++i) {
    const auto row = nd.row(i);
    points.push_back(PseudoPoint{i, std::vector<double>(row.begin(), row.end()), {i}, 0});
  }
  return make_state(0, nd.dimensions(), std::move(points), nd.size());
}

double cutoff_distance(const DistanceMatrix& m) {
  if (m.size() < 2) {
    throw TooFewPointsError(m.size(), 2);
  }
  double cutoff = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    cutoff = std::max(cutoff, m.row_min(i));
  }
  return cutoff;
}

Neighborhood neighborhood(const DistanceMatrix& m, std::size_t i, double cutoff) {
  if (i >= m.size()) {
    throw OutOfRangeError("point " + std::to_string(i) + " out of range");
  }
  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (j != i && m(i, j) <= cutoff + kDistanceTolerance) {
      others.push_back(j);
    }
  }
  std::sort(others.begin(), others.end(), [&](std::size_t a, std::size_t b) {
    const double da = m(i, a);
    const double db = m(i, b);
    return da != db ? da < db : a < b;
  });
  // Near-equal runs are tie blocks, listed by descending index.
  for (auto run = others.begin(); run != others.end();) {
    const double anchor = m(i, *run);
    auto end = std::find_if(run, others.end(), [&](std::size_t j) {
      return m(i, j) - anchor > kDistanceTolerance;
    });
    std::sort(run, end, std::greater<>());
    run = end;
  }

  Neighborhood nb;
  nb.center = i;
  nb.cutoff = cutoff;
  nb.members.reserve(others.size() + 1);
  nb.distances.reserve(others.size() + 1);
  nb.members.push_back(i);
  nb.distances.push_back(0.0);
  for (auto j : others) {
    nb.members.push_back(j);
    nb.distances.push_back(m(i, j));
  }
  return nb;
}

std::vector<Neighborhood> neighborhoods(const DistanceMatrix& m, double cutoff) {
  std::vector<Neighborhood> all;
  all.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    all.push_back(neighborhood(m, i, cutoff));
  }
  return all;
}

std::vector<std::size_t> sub_neighborhood(const Neighborhood& nb, std::size_t v) {
  if (v < 1 || v > nb.size()) {
    throw OutOfRangeError("sub-neighbourhood size " + std::to_string(v) +
                          " outside [1, " + std::to_string(nb.size()) + "]");
  }
  return {nb.members.begin(), nb.members.begin() + static_cast<long>(v)};
}

std::vector<MergeGroup> extremely_close_sets(std::span<const Neighborhood> hoods) {
  std::set<std::vector<std::size_t>> found;
  for (const auto& nb : hoods) {
    for (std::size_t v = 2; v <= nb.size(); ++v) {
      std::vector<std::size_t> candidate(nb.members.begin(),
                                         nb.members.begin() + static_cast<long>(v));
      std::sort(candidate.begin(), candidate.end());
      const bool close = std::all_of(candidate.begin(), candidate.end(), [&](std::size_t k) {
        return k < hoods.size() && prefix_matches(hoods[k], v, candidate);
      });
      if (close) {
        found.insert(std::move(candidate));
      }
    }
  }
  // Candidates sharing a point are prefixes of that point's neighbourhood,
  // so they nest; keep only the largest of each chain.
  std::vector<MergeGroup> maximal;
  for (const auto& group : found) {
    const bool contained = std::any_of(found.begin(), found.end(), [&](const auto& other) {
      return other.size() > group.size() &&
             std::includes(other.begin(), other.end(), group.begin(), group.end());
    });
    if (!contained) {
      maximal.push_back(MergeGroup{group});
    }
  }
  std::sort(maximal.begin(), maximal.end(), [](const MergeGroup& a, const MergeGroup& b) {
    return a.members.front() < b.members.front();
  });
  return maximal;
}

DepthMerger::DepthMerger(const ClusterState& state, int new_depth)
    : state_(state),
      new_depth_(new_depth),
      next_id_(state.next_id),
      consumed_(state.points.size(), false) {}

PseudoPoint DepthMerger::merge(const MergeGroup& group) {
  if (group.size() < 2) {
    throw InvariantViolation("merge group needs at least two members");
  }
  for (auto k : group.members) {
    if (k >= state_.points.size()) {
      throw OutOfRangeError("merge member " + std::to_string(k) + " out of range");
    }
    if (consumed_[k]) {
      throw StaleIndexError(k);
    }
  }
  PseudoPoint merged;
  merged.id = next_id_++;
  merged.formed_at_depth = new_depth_;
  merged.coords.assign(state_.dimensions, 0.0);
  for (auto k : group.members) {
    consumed_[k] = true;
    const auto& pt = state_.points[k];
    for (std::size_t c = 0; c < state_.dimensions; ++c) {
      merged.coords[c] += pt.coords[c];
    }
    merged.leaves.insert(merged.leaves.end(), pt.leaves.begin(), pt.leaves.end());
  }
  for (auto& c : merged.coords) {
    c /= static_cast<double>(group.size());
  }
  std::sort(merged.leaves.begin(), merged.leaves.end());
  return merged;
}

PseudoPoint merge_group(const ClusterState& state, const MergeGroup& group, int new_depth) {
  return DepthMerger(state, new_depth).merge(group);
}

StepResult cluster_step(const ClusterState& state, std::span<const std::string> labels) {
  if (state.points.size() < 2) {
    throw TooFewPointsError(state.points.size(), 2);
  }
  const int depth = state.depth + 1;
  const double cutoff = cutoff_distance(state.matrix);
  auto hoods = neighborhoods(state.matrix, cutoff);
  auto groups = extremely_close_sets(hoods);
  if (groups.empty()) {
    throw InvariantViolation("no extremely close set at depth " + std::to_string(depth));
  }

  DepthMerger merger(state, depth);
  std::vector<PseudoPoint> next_points;
  DepthRecord record{depth, cutoff, {}};
  for (const auto& group : groups) {
    auto merged = merger.merge(group);
    std::vector<std::string> names;
    names.reserve(merged.leaves.size());
    for (auto leaf : merged.leaves) {
      names.push_back(labels[leaf]);
    }
    record.groups.push_back(std::move(names));
    next_points.push_back(std::move(merged));
  }
  for (std::size_t k = 0; k < state.points.size(); ++k) {
    if (!merger.consumed(k)) {
      next_points.push_back(state.points[k]);
    }
  }
  auto next = make_state(depth, state.dimensions, std::move(next_points), merger.next_id());
  return StepResult{std::move(next), std::move(record), std::move(hoods), std::move(groups)};
}

Dendrogram build_dendrogram(const NormalizedDataset& nd, const StepObserver& observer) {
  Dendrogram tree;
  tree.leaf_labels = nd.labels();
  auto state = initial_state(nd);
  const std::size_t max_iterations = nd.size() - 1;
  while (state.points.size() > 1) {
    if (tree.trace.size() == max_iterations) {
      throw InvariantViolation("adaptive loop exceeded n - 1 iterations");
    }
    auto step = cluster_step(state, tree.leaf_labels);
    for (const auto& group : step.groups) {
      TreeNode node;
      node.depth = step.record.depth;
      node.cutoff = step.record.cutoff;
      for (auto k : group.members) {
        node.children.push_back(state.points[k].id);
        const auto& leaves = state.points[k].leaves;
        node.leaves.insert(node.leaves.end(), leaves.begin(), leaves.end());
      }
      std::sort(node.leaves.begin(), node.leaves.end());
      tree.internal_nodes.push_back(std::move(node));
    }
    tree.trace.push_back(step.record);
    if (observer) {
      observer(state, step);
    }
    state = std::move(step.next);
  }
  return tree;
}

}  // namespace amlink
