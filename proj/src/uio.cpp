#include "adnil/uio.hpp"

#include <algorithm>
#include <unordered_map>

namespace adnil {

namespace {

void check_size(int size) {
  if (size > kUioBruteForceLimit + 1)
    throw std::invalid_argument(
        "brute-force oracle limit exceeded: poset size " +
        std::to_string(size) + " > " + std::to_string(kUioBruteForceLimit + 1));
}

}  // namespace

UnitIntervalOrder poset_from_ideal(const RootIdeal& ideal) {
  const int N = ideal.rank().matrix_size();
  UnitIntervalOrder p{N, std::vector<std::vector<bool>>(
                             static_cast<std::size_t>(N),
                             std::vector<bool>(static_cast<std::size_t>(N)))};
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      if (ideal.contains(Root{i, j - 1}))
        p.less[static_cast<std::size_t>(i - 1)]
              [static_cast<std::size_t>(j - 1)] = true;
  return p;
}

IndifferenceGraph indifference_graph(const UnitIntervalOrder& p) {
  IndifferenceGraph g{p.size, std::vector<std::uint16_t>(
                                  static_cast<std::size_t>(p.size), 0)};
  for (int i = 1; i <= p.size; ++i)
    for (int j = i + 1; j <= p.size; ++j)
      if (!p.precedes(i, j) && !p.precedes(j, i)) {
        g.adjacency[static_cast<std::size_t>(i - 1)] |=
            std::uint16_t{1} << (j - 1);
        g.adjacency[static_cast<std::size_t>(j - 1)] |=
            std::uint16_t{1} << (i - 1);
      }
  return g;
}

namespace {

// All chains of the poset as vertex bitmasks (the empty chain excluded).
std::vector<std::uint16_t> all_chains(const UnitIntervalOrder& p) {
  std::vector<std::uint16_t> chains;
  // grow chains whose top element is v, scanning tops in increasing order
  std::vector<std::vector<std::uint16_t>> by_top(
      static_cast<std::size_t>(p.size));
  for (int v = 1; v <= p.size; ++v) {
    auto& mine = by_top[static_cast<std::size_t>(v - 1)];
    mine.push_back(std::uint16_t{1} << (v - 1));
    for (int u = 1; u < v; ++u)
      if (p.precedes(u, v))
        for (std::uint16_t chain : by_top[static_cast<std::size_t>(u - 1)])
          mine.push_back(chain | (std::uint16_t{1} << (v - 1)));
    chains.insert(chains.end(), mine.begin(), mine.end());
  }
  return chains;
}

}  // namespace

int greene_kleitman_oracle(const UnitIntervalOrder& p, int k) {
  check_size(p.size);
  if (k < 1 || k > p.size)
    throw std::invalid_argument("chain count k out of range 1..size");
  const std::vector<std::uint16_t> chains = all_chains(p);
  const std::uint16_t full = static_cast<std::uint16_t>((1u << p.size) - 1);
  // best[S] = largest union of a single chain inside S; then iterate k times.
  // The outer loop over available-sets is the memoization table.
  std::vector<int> prev(static_cast<std::size_t>(full) + 1, 0);
  std::vector<int> cur(static_cast<std::size_t>(full) + 1, 0);
  for (int round = 1; round <= k; ++round) {
    for (std::uint32_t s = 0; s <= full; ++s) {
      int best = prev[s];  // use fewer than `round` chains
      for (std::uint16_t chain : chains)
        if ((chain & s) == chain) {
          const int value = __builtin_popcount(chain) + prev[s & ~chain];
          best = std::max(best, value);
        }
      cur[s] = best;
    }
    std::swap(prev, cur);
  }
  return prev[full];
}

GraphInvariants graph_invariants(const IndifferenceGraph& g) {
  check_size(g.size);
  const std::uint32_t full = (1u << g.size) - 1;
  auto independent = [&](std::uint32_t s) {
    for (int v = 0; v < g.size; ++v)
      if ((s >> v) & 1)
        if (g.adjacency[static_cast<std::size_t>(v)] & s) return false;
    return true;
  };
  auto clique = [&](std::uint32_t s) {
    for (int v = 0; v < g.size; ++v)
      if ((s >> v) & 1) {
        const std::uint32_t others = s & ~(1u << v);
        if ((g.adjacency[static_cast<std::size_t>(v)] & others) != others)
          return false;
      }
    return true;
  };
  int alpha = 0, omega = 0;
  std::vector<std::uint8_t> indep(full + 1);
  for (std::uint32_t s = 0; s <= full; ++s) {
    indep[s] = independent(s) ? 1 : 0;
    if (indep[s]) alpha = std::max(alpha, __builtin_popcount(s));
    if (clique(s)) omega = std::max(omega, __builtin_popcount(s));
  }
  // chromatic number: peel off an independent set containing the lowest
  // uncovered vertex
  std::vector<int> colors(full + 1, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & (s ^ (s - 1));  // lowest set bit
    int best = g.size;
    // enumerate subsets t of s with low set
    for (std::uint32_t t = s; t; t = (t - 1) & s) {
      if (!(t & low) || !indep[t]) continue;
      best = std::min(best, 1 + colors[s & ~t]);
    }
    colors[s] = best;
  }
  return GraphInvariants{alpha, omega, colors[full]};
}

}  // namespace adnil
