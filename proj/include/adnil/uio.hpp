#pragma once

#include <cstdint>
#include <vector>

#include "adnil/core.hpp"

namespace adnil {

// Oracle ceiling: posets/graphs on more than kUioBruteForceLimit + 1 = 9
// vertices are refused.  These are verification oracles, not production
// algorithms.
inline constexpr int kUioBruteForceLimit = 8;

// Strict partial order on {1, ..., size} with i < j whenever i precedes j.
struct UnitIntervalOrder {
  int size;
  std::vector<std::vector<bool>> less;  // less[i-1][j-1]: i strictly below j

  bool precedes(int i, int j) const {
    return less[static_cast<std::size_t>(i - 1)]
               [static_cast<std::size_t>(j - 1)];
  }
};

// Complement-of-comparability graph on the same vertex set.
struct IndifferenceGraph {
  int size;
  std::vector<std::uint16_t> adjacency;  // bitmask rows, vertex v -> bit v

  bool edge(int i, int j) const {
    return adjacency[static_cast<std::size_t>(i - 1)] &
           (std::uint16_t{1} << (j - 1));
  }
};

// i precedes j iff the matrix position (i,j) lies in the ideal.
UnitIntervalOrder poset_from_ideal(const RootIdeal& ideal);
IndifferenceGraph indifference_graph(const UnitIntervalOrder& p);

// Exact maximum total size of k pairwise disjoint chains, by memoized
// exhaustive search.
int greene_kleitman_oracle(const UnitIntervalOrder& p, int k);

struct GraphInvariants {
  int independence_number;
  int clique_number;
  int chromatic_number;
};

// Exact invariants by exhaustive search over vertex subsets.
GraphInvariants graph_invariants(const IndifferenceGraph& g);

}  // namespace adnil
