#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fcover/graph.hpp"
#include "fcover/groupoid.hpp"
#include "fcover/inverse_monoid.hpp"

namespace fcover {

struct SearchBudget {
  std::size_t max_group_order = 24;
  // Candidate labelings examined across all groups; 0 examines none.
  std::size_t max_candidates = 5000;
  // Wall clock cap. Off by default so that outcomes depend only on the
  // two counts above.
  std::optional<std::chrono::milliseconds> time_cap;
  std::size_t groupoid_limit = 1u << 15;
};

struct SearchStats {
  std::size_t groups_tried = 0;
  std::size_t candidates = 0;
  std::size_t too_large = 0;
  std::size_t not_2_acyclic = 0;
  std::size_t not_symmetric = 0;
  std::size_t edge_orbits = 0;
  // "found", "exhausted" (ladder ran out), "candidates" or "time".
  std::string stop_reason;
  double seconds = 0;
};

// A finite group on the search ladder, as a permutation group.
struct LadderGroup {
  std::string name;
  MonoidPtr group;
};

// Z_{q1} x ... x Z_{qr} for prime powers q1 <= ... <= qr (one per
// isomorphism class), then S3, S4, S5, each kept if its order is at most
// `max_order`. Sorted by order; abelian groups first at equal order. Starts
// with the trivial group.
std::vector<LadderGroup> group_ladder(std::size_t max_order);

// Orbits of edges under the group generated by `symmetries`, numbered by
// least edge.
std::vector<std::size_t> edge_orbits(const MultiDigraph& g,
                                     std::span<const GraphSymmetry> symmetries);

struct SearchResult {
  std::optional<Groupoid> groupoid;
  std::string group_name;
  SearchStats stats;
};

// Looks for a symmetric 2-acyclic groupoid among group-labeled ones. Labels
// are constant on edge orbits, so candidates are labelings of orbit
// representatives, tried group by group along the ladder in lexicographic
// order. The first candidate passing both certifiers is returned.
SearchResult search_groupoid(const MultiDigraph& g,
                             std::span<const GraphSymmetry> symmetries,
                             const SearchBudget& budget);

}  // namespace fcover
