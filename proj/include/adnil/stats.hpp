#pragma once

#include <map>
#include <string>
#include <vector>

#include "adnil/core.hpp"

namespace adnil {

unsigned long long binomial_coefficient(int n, int k);
unsigned long long catalan_number(int m);
// Narayana number N(m, k) = binom(m,k) binom(m,k-1) / m, 1 <= k <= m.
unsigned long long narayana_number(int m, int k);

// All partitions of n in descending lexicographic order ([n] first).
std::vector<Partition> partitions_of(int n);
long long partition_count(int n);

using PartitionCounts = std::map<Partition, long long, PartitionTableLess>;

// Class sizes N_lambda, keyed by the orbit partition.  Built twice -- once
// by counting orbit-partition fibers, once from the basic-move class sizes
// -- and the two are compared; a mismatch raises ConsistencyError.
struct NLambdaTable {
  Rank rank;
  PartitionCounts counts;
};
NLambdaTable n_lambda_table(Rank rank, int jobs = 1);

// Joint tally of (largest part of the orbit partition, number of valleys).
struct JointTable {
  Rank rank;
  // cells[r-1][s]: r = largest part in 1..n+1, s = valleys in 0..n
  std::vector<std::vector<long long>> cells;

  long long at(int r, int s) const;
  long long row_sum(int r) const;
  long long column_sum(int s) const;
  long long total() const;
};
JointTable joint_table(Rank rank, int jobs = 1);

// Closed multinomial formula for the number of ideals with Kreweras
// partition lambda; exact integer arithmetic, final division checked.
unsigned long long kreweras_number(const Partition& lambda, Rank rank);

// The same counts obtained by enumeration.
struct KrewerasTable {
  Rank rank;
  PartitionCounts counts;
};
KrewerasTable kreweras_table(Rank rank, int jobs = 1);

struct CheckReport {
  std::string name;
  bool ok = true;
  std::vector<std::string> lines;
};

// Valley counts against the Narayana numbers.
CheckReport narayana_check(Rank rank, int jobs = 1);
// The index/corank double count and its two-variable refinement.
CheckReport index_corank_check(Rank rank, int jobs = 1);
// Observed anti-diagonal of the joint table next to the conjectured
// binomials; reported, never asserted.
CheckReport antidiagonal_report(Rank rank, int jobs = 1);

}  // namespace adnil
