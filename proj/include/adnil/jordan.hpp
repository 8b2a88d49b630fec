#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "adnil/core.hpp"

namespace adnil {

// Field used for all exact rank computations.  A single random
// specialization over a field this large attains the generic Jordan type
// except with negligible probability, and 64-bit products never overflow.
inline constexpr std::uint64_t kOraclePrime = 2147483647ULL;  // 2^31 - 1

// Gerstenhaber's greedy chains S_1, S_2, ... partitioning {1, ..., n+1};
// entries keep their original labels.
struct CharacteristicSequences {
  std::vector<std::vector<int>> sequences;
};

// Strictly upper triangular matrix over F_p with explicitly stored nonzero
// entries, indexed 1..size.
class SparseNilpotentMatrix {
 public:
  explicit SparseNilpotentMatrix(int size);

  void set(int row, int col, std::uint64_t value);
  int size() const { return size_; }
  const std::map<std::pair<int, int>, std::uint64_t>& entries() const {
    return entries_;
  }

 private:
  int size_;
  std::map<std::pair<int, int>, std::uint64_t> entries_;
};

// The greedy successor chains: S_1 starts at 1 and the successor of i is the
// smallest unused j with t_{ij} in the ideal; later sequences restart at the
// smallest unused index.
CharacteristicSequences characteristic_sequences(const RootIdeal& ideal);

// Lengths of the characteristic sequences: the Jordan partition of the dense
// nilpotent orbit meeting the ideal.
Partition gerstenhaber_partition(const RootIdeal& ideal);

// The explicit orbit representative: t_{i1,i2} + t_{i2,i3} + ... along each
// characteristic sequence, coefficient 1.
SparseNilpotentMatrix gerstenhaber_element(const RootIdeal& ideal);

// Jordan type from exact ranks of powers over F_p: the conjugate partition
// has rank(m^{k-1}) - rank(m^k) parts of size >= k.
Partition jordan_type(const SparseNilpotentMatrix& m);

// Thrown when the randomized trials cannot be ordered by dominance, which
// indicates an arithmetic bug rather than genuine ambiguity; rerun with a
// higher trial count to investigate.
class DominanceAnomaly : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Independent Jordan-type oracle: fills every matrix position of the closure
// with random nonzero scalars, takes the Jordan type, and returns the
// dominance maximum over `trials` seeded attempts.
Partition generic_orbit_partition(const RootIdeal& ideal, int trials,
                                  std::uint64_t seed);

// Jordan type of e_I, the 0/1 matrix with a unit in position (a, b+1) for
// every minimal root [a,b].
Partition kreweras_partition(const RootIdeal& ideal);

// m_I, the number of minimal roots; also n+1 minus the number of parts of
// the Kreweras partition.
int valley_count(const RootIdeal& ideal);

}  // namespace adnil
