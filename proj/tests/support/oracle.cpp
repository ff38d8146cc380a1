#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace amlink::testing {

namespace {

constexpr double kTol = 1e-9;

std::string describe(const std::vector<std::size_t>& group) {
  std::ostringstream out;
  out << '{';
  for (std::size_t k = 0; k < group.size(); ++k) {
    out << (k ? "," : "") << group[k];
  }
  out << '}';
  return out.str();
}

bool subset_of(const std::vector<std::size_t>& small, const std::vector<std::size_t>& big) {
  return std::all_of(small.begin(), small.end(), [&](std::size_t x) {
    return std::find(big.begin(), big.end(), x) != big.end();
  });
}

std::vector<std::size_t> sorted_prefix(const std::vector<std::size_t>& hood, std::size_t v) {
  std::vector<std::size_t> prefix(hood.begin(), hood.begin() + static_cast<long>(v));
  std::sort(prefix.begin(), prefix.end());
  return prefix;
}

bool satisfies_definition(const std::vector<std::vector<std::size_t>>& hoods,
                          const std::vector<std::size_t>& group) {
  const std::size_t v = group.size();
  for (auto member : group) {
    if (member >= hoods.size() || hoods[member].size() < v ||
        sorted_prefix(hoods[member], v) != group) {
      return false;
    }
  }
  return v >= 2;
}

}  // namespace

std::vector<std::vector<double>> brute_distances(const std::vector<Point>& points) {
  const std::size_t n = points.size();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      long double acc = 0.0L;
      for (std::size_t k = 0; k < points[i].size(); ++k) {
        const long double diff = static_cast<long double>(points[i][k]) - points[j][k];
        acc += diff * diff;
      }
      d[i][j] = static_cast<double>(std::sqrt(acc));
    }
  }
  return d;
}

double brute_cutoff(const std::vector<std::vector<double>>& d) {
  double best = -1.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (j != i && d[i][j] < nearest) {
        nearest = d[i][j];
      }
    }
    best = std::max(best, nearest);
  }
  return best;
}

std::vector<std::size_t> brute_neighbourhood(const std::vector<std::vector<double>>& d,
                                             std::size_t i, double cutoff) {
  std::vector<std::size_t> order{i};
  std::vector<bool> taken(d.size(), false);
  taken[i] = true;
  while (true) {
    double low = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (!taken[j] && d[i][j] <= cutoff + kTol) {
        low = std::min(low, d[i][j]);
      }
    }
    if (!std::isfinite(low)) {
      return order;
    }
    for (std::size_t j = d.size(); j-- > 0;) {
      if (!taken[j] && d[i][j] <= cutoff + kTol && d[i][j] - low <= kTol) {
        taken[j] = true;
        order.push_back(j);
      }
    }
  }
}

std::vector<std::vector<std::size_t>> brute_close_candidates(
    const std::vector<std::vector<std::size_t>>& hoods) {
  std::set<std::vector<std::size_t>> found;
  for (const auto& hood : hoods) {
    for (std::size_t v = 2; v <= hood.size(); ++v) {
      auto prefix = sorted_prefix(hood, v);
      if (satisfies_definition(hoods, prefix)) {
        found.insert(prefix);
      }
    }
  }
  return {found.begin(), found.end()};
}

std::vector<std::string> verify_step(const std::vector<Point>& points, double engine_cutoff,
                                     const std::vector<std::vector<std::size_t>>& engine_groups) {
  std::vector<std::string> problems;
  const std::size_t n = points.size();
  const auto d = brute_distances(points);
  const double cutoff = brute_cutoff(d);
  if (std::abs(cutoff - engine_cutoff) > kTol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "cut-off " << engine_cutoff << " != brute force " << cutoff;
    problems.push_back(msg.str());
  }

  std::vector<std::vector<std::size_t>> hoods;
  for (std::size_t i = 0; i < n; ++i) {
    hoods.push_back(brute_neighbourhood(d, i, cutoff));
    if (n >= 2 && hoods.back().size() < 2) {
      problems.push_back("neighbourhood of " + std::to_string(i) + " has fewer than 2 points");
    }
  }

  if (engine_groups.empty()) {
    problems.push_back("no group emitted");
  }
  std::vector<int> owner(n, -1);
  for (std::size_t g = 0; g < engine_groups.size(); ++g) {
    const auto& group = engine_groups[g];
    if (!std::is_sorted(group.begin(), group.end())) {
      problems.push_back("group " + describe(group) + " is not sorted");
    }
    if (!satisfies_definition(hoods, group)) {
      problems.push_back("group " + describe(group) + " is not extremely close");
    }
    for (auto member : group) {
      if (member >= n) {
        problems.push_back("group " + describe(group) + " has an out-of-range member");
        continue;
      }
      if (owner[member] != -1) {
        problems.push_back("point " + std::to_string(member) + " is in two groups");
      }
      owner[member] = static_cast<int>(g);
    }
    // homogeneity
    for (auto a : group) {
      for (auto b : group) {
        if (a == b || a >= n || b >= n) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (std::find(group.begin(), group.end(), j) != group.end()) {
            continue;
          }
          if (d[a][b] > d[a][j] + kTol || d[a][b] > d[b][j] + kTol) {
            problems.push_back("group " + describe(group) + " is not homogeneous against " +
                               std::to_string(j));
          }
        }
      }
    }
  }

  for (const auto& candidate : brute_close_candidates(hoods)) {
    const bool covered = std::any_of(engine_groups.begin(), engine_groups.end(),
                                     [&](const auto& g) { return subset_of(candidate, g); });
    if (!covered) {
      problems.push_back("valid set " + describe(candidate) + " not inside any emitted group");
    }
    for (const auto& group : engine_groups) {
      if (candidate.size() > group.size() && subset_of(group, candidate)) {
        problems.push_back("emitted group " + describe(group) + " is not maximal");
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (hoods[i].size() >= 2 && hoods[j].size() >= 2 &&
          sorted_prefix(hoods[i], 2) == sorted_prefix(hoods[j], 2) &&
          (owner[i] == -1 || owner[i] != owner[j])) {
        problems.push_back("mutual pair {" + std::to_string(i) + "," + std::to_string(j) +
                           "} left unmerged");
      }
    }
  }
  return problems;
}

}  // namespace amlink::testing
