#include "adnil/jordan.hpp"

#include <algorithm>
#include <limits>

#include "adnil/rng.hpp"

namespace adnil {

namespace {

constexpr std::uint64_t P = kOraclePrime;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return (a * b) % P;  // both < 2^31, no overflow
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  base %= P;
  while (exp) {
    if (exp & 1) result = mulmod(result, base);
    base = mulmod(base, base);
    exp >>= 1;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, P - 2); }

struct FpMatrix {
  int n;
  std::vector<std::uint64_t> data;

  explicit FpMatrix(int size)
      : n(size), data(static_cast<std::size_t>(size) * size, 0) {}
  std::uint64_t& at(int r, int c) {
    return data[static_cast<std::size_t>(r) * n + c];
  }
  std::uint64_t at(int r, int c) const {
    return data[static_cast<std::size_t>(r) * n + c];
  }
};

FpMatrix multiply(const FpMatrix& x, const FpMatrix& y) {
  FpMatrix z(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      const std::uint64_t v = x.at(i, k);
      if (!v) continue;
      for (int j = 0; j < x.n; ++j)
        z.at(i, j) = (z.at(i, j) + mulmod(v, y.at(k, j))) % P;
    }
  return z;
}

// Exact rank by Gaussian elimination with full pivoting.
int rank_of(FpMatrix m) {
  int rank = 0;
  for (; rank < m.n; ++rank) {
    int pr = -1, pc = -1;
    for (int r = rank; r < m.n && pr < 0; ++r)
      for (int c = rank; c < m.n; ++c)
        if (m.at(r, c)) {
          pr = r;
          pc = c;
          break;
        }
    if (pr < 0) break;
    for (int c = 0; c < m.n; ++c) std::swap(m.at(rank, c), m.at(pr, c));
    for (int r = 0; r < m.n; ++r) std::swap(m.at(r, rank), m.at(r, pc));
    const std::uint64_t inv = invmod(m.at(rank, rank));
    for (int r = rank + 1; r < m.n; ++r) {
      const std::uint64_t factor = mulmod(m.at(r, rank), inv);
      if (!factor) continue;
      for (int c = rank; c < m.n; ++c) {
        const std::uint64_t sub = mulmod(factor, m.at(rank, c));
        m.at(r, c) = (m.at(r, c) + P - sub) % P;
      }
    }
  }
  return rank;
}

FpMatrix dense_of(const SparseNilpotentMatrix& m) {
  FpMatrix dense(m.size());
  for (const auto& [pos, value] : m.entries())
    dense.at(pos.first - 1, pos.second - 1) = value;
  return dense;
}

constexpr int kNoSuccessor = std::numeric_limits<int>::max();

// min_right[i] = the smallest right endpoint among minimal roots with left
// endpoint >= i; then t_{ij} lies in the ideal iff j > min_right[i].
std::vector<int> min_right_table(const RootIdeal& ideal) {
  const int N = ideal.rank().matrix_size();
  std::vector<int> min_right(static_cast<std::size_t>(N) + 2, kNoSuccessor);
  for (const Root& r : ideal.min_roots())
    min_right[static_cast<std::size_t>(r.i)] = r.j;
  for (int i = N - 1; i >= 1; --i)
    min_right[static_cast<std::size_t>(i)] =
        std::min(min_right[static_cast<std::size_t>(i)],
                 min_right[static_cast<std::size_t>(i) + 1]);
  return min_right;
}

}  // namespace

SparseNilpotentMatrix::SparseNilpotentMatrix(int size) : size_(size) {
  if (size < 1) throw std::invalid_argument("matrix size must be positive");
}

void SparseNilpotentMatrix::set(int row, int col, std::uint64_t value) {
  if (row < 1 || col <= row || col > size_)
    throw std::invalid_argument("entry must be strictly upper triangular");
  value %= P;
  if (value == 0)
    throw std::invalid_argument("stored entries must be nonzero mod p");
  entries_[{row, col}] = value;
}

CharacteristicSequences characteristic_sequences(const RootIdeal& ideal) {
  const int N = ideal.rank().matrix_size();
  const std::vector<int> min_right = min_right_table(ideal);
  std::vector<bool> used(static_cast<std::size_t>(N) + 1, false);
  CharacteristicSequences result;
  for (int start = 1; start <= N; ++start) {
    if (used[static_cast<std::size_t>(start)]) continue;
    std::vector<int> seq{start};
    used[static_cast<std::size_t>(start)] = true;
    for (int i = start;;) {
      const int threshold = min_right[static_cast<std::size_t>(i)];
      if (threshold == kNoSuccessor) break;
      int next = 0;
      for (int j = threshold + 1; j <= N; ++j)
        if (!used[static_cast<std::size_t>(j)]) {
          next = j;
          break;
        }
      if (!next) break;
      seq.push_back(next);
      used[static_cast<std::size_t>(next)] = true;
      i = next;
    }
    result.sequences.push_back(std::move(seq));
  }
  return result;
}

Partition gerstenhaber_partition(const RootIdeal& ideal) {
  std::vector<int> lengths;
  for (const auto& seq : characteristic_sequences(ideal).sequences)
    lengths.push_back(static_cast<int>(seq.size()));
  return Partition(std::move(lengths));  // ctor rejects non-monotone lengths
}

SparseNilpotentMatrix gerstenhaber_element(const RootIdeal& ideal) {
  SparseNilpotentMatrix m(ideal.rank().matrix_size());
  for (const auto& seq : characteristic_sequences(ideal).sequences)
    for (std::size_t k = 0; k + 1 < seq.size(); ++k)
      m.set(seq[k], seq[k + 1], 1);
  return m;
}

Partition jordan_type(const SparseNilpotentMatrix& m) {
  const FpMatrix dense = dense_of(m);
  std::vector<int> ranks{m.size()};
  FpMatrix power = dense;
  while (true) {
    const int r = rank_of(power);
    ranks.push_back(r);
    if (r == 0) break;
    power = multiply(power, dense);
  }
  std::vector<int> conjugate;
  for (std::size_t k = 1; k < ranks.size(); ++k)
    conjugate.push_back(ranks[k - 1] - ranks[k]);
  return dual_partition(Partition(std::move(conjugate)));
}

Partition generic_orbit_partition(const RootIdeal& ideal, int trials,
                                  std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const std::vector<Root> support = closure(ideal);
  SplitMix64 master{seed};
  std::vector<std::uint64_t> sub_seeds;
  for (int t = 0; t < trials; ++t) sub_seeds.push_back(master.next());

  std::vector<Partition> types;
  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng{sub_seeds[static_cast<std::size_t>(t)]};
    SparseNilpotentMatrix m(ideal.rank().matrix_size());
    for (const Root& r : support)
      m.set(r.i, r.j + 1, 1 + rng.next() % (P - 1));
    types.push_back(jordan_type(m));
  }

  Partition best = types.front();
  for (const Partition& p : types)
    if (dominance_leq(best, p)) best = p;
  for (const Partition& p : types)
    if (!dominance_leq(p, best))
      throw DominanceAnomaly(
          "generic trials for " + format_ideal(ideal) +
          " are dominance-incomparable: " + format_partition(p) + " vs " +
          format_partition(best) + "; rerun with a higher trial count");
  return best;
}

Partition kreweras_partition(const RootIdeal& ideal) {
  SparseNilpotentMatrix m(ideal.rank().matrix_size());
  for (const Root& r : ideal.min_roots()) m.set(r.i, r.j + 1, 1);
  return jordan_type(m);
}

int valley_count(const RootIdeal& ideal) {
  return static_cast<int>(ideal.min_roots().size());
}

}  // namespace adnil
