#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace adnil {

// Raised when a computation falsifies one of the structural identities the
// library is built around (constant class labels, table margins, ...).
// Seeing this means a bug somewhere, not bad input.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rank n of the type A_n root system.  Everything lives inside
// (n+1) x (n+1) matrices; n = 0 is the degenerate rank whose only ideal is
// the empty one.
struct Rank {
  int n;

  explicit Rank(int rank) : n(rank) {
    if (rank < 0) throw std::invalid_argument("rank must be non-negative");
  }
  int matrix_size() const { return n + 1; }

  friend bool operator==(const Rank&, const Rank&) = default;
};

// Largest rank accepted by the enumeration-backed operations (the full ideal
// set of A_12 has 742900 elements; beyond that the tool refuses).
inline constexpr int kEnumerationRankLimit = 12;

// Positive root [i,j] = e_i - e_{j+1} of A_n, 1 <= i <= j <= n.  It is the
// weight of the matrix unit t_{i,j+1}; [i,i] is the simple root alpha_i.
struct Root {
  int i;  // left endpoint
  int j;  // right endpoint

  friend bool operator==(const Root&, const Root&) = default;
  // Lexicographic tie-break order; unrelated to the root poset.
  friend auto operator<=>(const Root&, const Root&) = default;
};

// r1 <= r2 in the root poset: [i,j] precedes [i',j'] iff i' <= i and j <= j'.
bool root_leq(Root r1, Root r2);

// All positive roots of A_n, ordered by (i, j).
std::vector<Root> positive_roots(Rank rank);

// An ad-nilpotent ideal of the upper triangular nilradical, stored
// canonically as the antichain of its minimal roots sorted by left endpoint.
// Left endpoints are pairwise distinct and right endpoints are pairwise
// distinct; with the sort this makes both strictly increasing.
class RootIdeal {
 public:
  RootIdeal(Rank rank, std::vector<Root> min_roots);

  Rank rank() const { return rank_; }
  const std::vector<Root>& min_roots() const { return min_roots_; }
  bool empty() const { return min_roots_.empty(); }

  // Membership of r in the upward closure.
  bool contains(Root r) const;

  // True when every minimal root is simple, i.e. the ideal is the nilradical
  // of a standard parabolic subalgebra.
  bool is_parabolic() const;

  friend bool operator==(const RootIdeal&, const RootIdeal&) = default;

 private:
  Rank rank_;
  std::vector<Root> min_roots_;
};

// The full upward closure of the ideal, ordered by (i, j).
std::vector<Root> closure(const RootIdeal& ideal);

// Inverse of closure.  The input must be upward closed; otherwise an
// invalid_argument carrying a witness pair (beta in the set, a cover of beta
// outside it) is thrown.
RootIdeal minimal_roots(Rank rank, std::vector<Root> upward_closed);

// Whether the ideal is fixed by the simple reflection s_j, i.e. j is neither
// a left nor a right endpoint of a minimal root.  1 <= j <= n.
bool is_j_stable(const RootIdeal& ideal, int j);

// ---------------------------------------------------------------------------
// Ballot sequences / Dyck paths.
//
// A ballot word of length 2N (N = n+1) is read as a monotone lattice path
// from (0,0) to (N,N): '1' is a north step, '0' an east step, and the prefix
// heights h_j = #1 - #0 >= 0 keep the path weakly above the diagonal.  The
// path of an ideal has a concave (east-then-north) corner at (a,b) for each
// minimal root [a,b]; equivalently each minimal root is a "01" factor of the
// word.  The empty ideal is 1^N 0^N, the full nilradical (10)^N, and
// removing a minimal root from an ideal turns its "01" factor into "10".
// ---------------------------------------------------------------------------

class BallotSequence {
 public:
  // Validates the ballot invariant: even length, equally many ones and
  // zeros, all prefix heights nonnegative.
  explicit BallotSequence(std::string bits);

  const std::string& bits() const { return bits_; }
  Rank rank() const { return Rank(static_cast<int>(bits_.size()) / 2 - 1); }
  std::vector<int> heights() const;

  friend bool operator==(const BallotSequence&, const BallotSequence&) = default;

 private:
  std::string bits_;
};

BallotSequence ideal_to_ballot(const RootIdeal& ideal);
RootIdeal ballot_to_ideal(const BallotSequence& word);

// Number of "01" factors; equals the number of minimal roots of the ideal.
int valleys(const BallotSequence& word);
// Largest prefix height; equals the number of parts of the orbit partition.
int max_height(const BallotSequence& word);

// ---------------------------------------------------------------------------
// Enumeration.
//
// The canonical order of the ideal set is lexicographic on the ballot word
// with '1' < '0' (so the empty ideal comes first and the full nilradical
// last).  Keys pack the word into an integer whose numeric order equals the
// canonical order, which makes them usable both as hash keys and as the
// deterministic tie-break everywhere a representative has to be elected.
// ---------------------------------------------------------------------------

std::uint32_t enumeration_key(const RootIdeal& ideal);
std::uint32_t ballot_key(const BallotSequence& word);
RootIdeal ideal_from_key(Rank rank, std::uint32_t key);

// Every ideal of A_n exactly once, in canonical order.
std::vector<RootIdeal> enumerate_ideals(Rank rank);
// Same sequence as enumeration keys (compact form used by the kernels).
std::vector<std::uint32_t> enumerate_ideal_keys(Rank rank);

// ---------------------------------------------------------------------------
// Partitions and compositions.
// ---------------------------------------------------------------------------

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;                     // sum of parts
  int count() const { return static_cast<int>(parts_.size()); }
  int first() const { return parts_.empty() ? 0 : parts_.front(); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Conjugate partition; an involution.
Partition dual_partition(const Partition& p);

// Dominance order on partitions of equal size: every prefix sum of p is at
// most the corresponding prefix sum of q.  Unequal sizes are rejected.
bool dominance_leq(const Partition& p, const Partition& q);

// Orders partitions of a fixed size the way the enumerative tables print
// them: descending lexicographic, [7] first, [1^7] last.
struct PartitionTableLess {
  bool operator()(const Partition& a, const Partition& b) const;
};

struct Composition {
  std::vector<int> parts;  // all >= 1
};

// The composition (j_1, j_2-j_1, ..., n+1-j_l) of n+1 attached to strictly
// increasing cut points 1 <= j_1 < ... < j_l <= n.
Composition cut_composition(Rank rank, const std::vector<int>& cut_points);

// The parabolic nilradical with minimal roots [j_1,j_1], ..., [j_l,j_l].
RootIdeal parabolic_ideal(Rank rank, const std::vector<int>& cut_points);

// Partition mu: the composition sorted into weakly decreasing order.
Partition mu(const Composition& c);

// ---------------------------------------------------------------------------
// Text formats (the interchange currency of the CLI).
// Ideals: comma-separated bracket pairs "[1,1],[3,3]"; the empty ideal is
// the literal "-".  Ballot words: strings over {0,1}.  Partitions: "[3,1]".
// ---------------------------------------------------------------------------

std::string format_root(Root r);
std::string format_ideal(const RootIdeal& ideal);
RootIdeal parse_ideal(Rank rank, std::string_view text);
std::string format_partition(const Partition& p);
Partition parse_partition(std::string_view text);
std::string format_sequences(const std::vector<std::vector<int>>& seqs);

}  // namespace adnil
