#pragma once

// Adaptive mean-linkage clustering.
//
// Each iteration computes a cut-off d_u = max_i min_{j != i} d(i, j), builds
// every point's neighbourhood (all points within d_u, nearest first), finds
// the maximal "extremely close" sets (groups S of size v whose members all
// have S as their first v neighbours), and replaces each set by one
// pseudo-point at the mean of its members' coordinates. Several groups merge
// at once, so the tree usually needs far fewer levels than n - 1.
//
// Neighbourhood order: the centre first, then ascending distance. Distances
// within kDistanceTolerance of the first distance of a run are tied and
// listed by descending point index. Point indices are positions in the
// current state, which keeps points sorted by their smallest original leaf.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "amlink/dendrogram.hpp"
#include "amlink/distance_matrix.hpp"
#include "amlink/normalize.hpp"

namespace amlink {

struct Neighborhood {
  std::size_t center = 0;
  std::vector<std::size_t> members;  // members[0] == center
  std::vector<double> distances;     // parallel to members, non-decreasing
  double cutoff = 0.0;

  std::size_t size() const noexcept { return members.size(); }
};

/// Indices of the points merged together, sorted ascending.
struct MergeGroup {
  std::vector<std::size_t> members;

  std::size_t size() const noexcept { return members.size(); }
  friend bool operator==(const MergeGroup&, const MergeGroup&) = default;
  friend auto operator<=>(const MergeGroup&, const MergeGroup&) = default;
};

struct PseudoPoint {
  std::size_t id = 0;  // dendrogram node id: original points keep their row index
  std::vector<double> coords;
  std::vector<std::size_t> leaves;  // sorted original row indices
  int formed_at_depth = 0;

  friend bool operator==(const PseudoPoint&, const PseudoPoint&) = default;
};

struct ClusterState {
  int depth = 0;
  std::size_t dimensions = 0;
  std::vector<PseudoPoint> points;  // sorted by first leaf
  DistanceMatrix matrix;            // over `points`
  std::size_t next_id = 0;          // id for the next pseudo-point
};

/// Depth-0 state: one pseudo-point per row of `nd`.
ClusterState initial_state(const NormalizedDataset& nd);

/// max_i min_{j != i} d(i, j). Throws TooFewPointsError when n < 2.
double cutoff_distance(const DistanceMatrix& m);

/// Points within `cutoff` of point i, ordered as described above.
Neighborhood neighborhood(const DistanceMatrix& m, std::size_t i, double cutoff);

std::vector<Neighborhood> neighborhoods(const DistanceMatrix& m, double cutoff);

/// First v members of the neighbourhood; OutOfRangeError unless 1 <= v <= size.
std::vector<std::size_t> sub_neighborhood(const Neighborhood& nb, std::size_t v);

/// Every set-maximal extremely close set, sorted by smallest member. The
/// neighbourhoods must be indexed by centre and share one cut-off.
std::vector<MergeGroup> extremely_close_sets(std::span<const Neighborhood> neighborhoods);

/// Merges groups of one state into pseudo-points, refusing to reuse a point.
class DepthMerger {
public:
  DepthMerger(const ClusterState& state, int new_depth);

  /// Mean of the members' coordinates and union of their leaves.
  /// Throws StaleIndexError if a member was merged earlier in this depth.
  PseudoPoint merge(const MergeGroup& group);

  bool consumed(std::size_t index) const { return consumed_.at(index); }
  std::size_t next_id() const noexcept { return next_id_; }

private:
  const ClusterState& state_;
  int new_depth_;
  std::size_t next_id_;
  std::vector<bool> consumed_;
};

/// One-shot merge of a single group (no staleness tracking).
PseudoPoint merge_group(const ClusterState& state, const MergeGroup& group, int new_depth);

struct StepResult {
  ClusterState next;
  DepthRecord record;
  std::vector<Neighborhood> neighborhoods;  // of the input state
  std::vector<MergeGroup> groups;           // indices into the input state
};

/// One iteration. `labels` are the original leaf labels, used for the record.
/// Throws TooFewPointsError when the state holds a single point.
StepResult cluster_step(const ClusterState& state, std::span<const std::string> labels);

/// Called after each iteration with the state it started from.
using StepObserver = std::function<void(const ClusterState& before, const StepResult& step)>;

/// Iterate until one pseudo-point remains. A one-row dataset yields a
/// leaf-only tree with an empty trace.
Dendrogram build_dendrogram(const NormalizedDataset& nd, const StepObserver& observer = {});

}  // namespace amlink
