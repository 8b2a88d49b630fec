#include "adnil/stats.hpp"

#include <algorithm>
#include <numeric>

#include "adnil/jordan.hpp"
#include "adnil/moves.hpp"
#include "adnil/parallel.hpp"

namespace adnil {

unsigned long long binomial_coefficient(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned long long>(n - k + i);
    result /= static_cast<unsigned long long>(i);  // exact at every step
  }
  return result;
}

unsigned long long catalan_number(int m) {
  if (m < 0) throw std::invalid_argument("Catalan index must be >= 0");
  return binomial_coefficient(2 * m, m) / static_cast<unsigned>(m + 1);
}

unsigned long long narayana_number(int m, int k) {
  if (m < 1 || k < 1 || k > m)
    throw std::invalid_argument("Narayana index out of range");
  const unsigned long long product =
      binomial_coefficient(m, k) * binomial_coefficient(m, k - 1);
  if (product % static_cast<unsigned>(m) != 0)
    throw ConsistencyError("Narayana formula did not divide exactly");
  return product / static_cast<unsigned>(m);
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& stack,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(stack);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    stack.push_back(part);
    emit_partitions(remaining - part, part, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative number");
  std::vector<Partition> out;
  std::vector<int> stack;
  emit_partitions(n, n == 0 ? 1 : n, stack, out);
  return out;
}

long long partition_count(int n) {
  if (n < 0) return 0;
  std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int sum = part; sum <= n; ++sum)
      p[static_cast<std::size_t>(sum)] +=
          p[static_cast<std::size_t>(sum - part)];
  return p[static_cast<std::size_t>(n)];
}

// --- the shared per-ideal fold -------------------------------------------------

namespace {

struct ProfileTally {
  PartitionCounts by_lambda;
  PartitionCounts by_kreweras;
  // grids [x-1][s]: x = largest part (resp. part count) of lambda, s = valleys
  std::vector<std::vector<long long>> index_valleys;
  std::vector<std::vector<long long>> corank_valleys;
  long long total = 0;

  explicit ProfileTally(int N)
      : index_valleys(static_cast<std::size_t>(N),
                      std::vector<long long>(static_cast<std::size_t>(N), 0)),
        corank_valleys(static_cast<std::size_t>(N),
                       std::vector<long long>(static_cast<std::size_t>(N), 0)) {
  }

  void merge(const ProfileTally& other) {
    for (const auto& [key, count] : other.by_lambda) by_lambda[key] += count;
    for (const auto& [key, count] : other.by_kreweras)
      by_kreweras[key] += count;
    for (std::size_t x = 0; x < index_valleys.size(); ++x)
      for (std::size_t s = 0; s < index_valleys.size(); ++s) {
        index_valleys[x][s] += other.index_valleys[x][s];
        corank_valleys[x][s] += other.corank_valleys[x][s];
      }
    total += other.total;
  }
};

// One pass over all ideals; shards merge in shard order, so the result does
// not depend on the thread count.
ProfileTally profile_fold(Rank rank, int jobs, bool with_kreweras) {
  const std::vector<std::uint32_t> keys = enumerate_ideal_keys(rank);
  const int N = rank.matrix_size();
  const std::size_t shards = std::min<std::size_t>(
      static_cast<std::size_t>(resolve_jobs(jobs)),
      std::max<std::size_t>(keys.size(), 1));
  std::vector<ProfileTally> slots(shards, ProfileTally(N));
  for_each_shard(
      keys.size(), static_cast<int>(shards),
      [&](std::size_t shard, std::size_t begin, std::size_t end) {
        ProfileTally& tally = slots[shard];
        for (std::size_t k = begin; k < end; ++k) {
          const RootIdeal ideal = ideal_from_key(rank, keys[k]);
          const Partition lambda = gerstenhaber_partition(ideal);
          const int s = valley_count(ideal);
          tally.by_lambda[lambda] += 1;
          tally.index_valleys[static_cast<std::size_t>(lambda.first() - 1)]
                             [static_cast<std::size_t>(s)] += 1;
          tally.corank_valleys[static_cast<std::size_t>(lambda.count() - 1)]
                              [static_cast<std::size_t>(s)] += 1;
          if (with_kreweras) tally.by_kreweras[kreweras_partition(ideal)] += 1;
          tally.total += 1;
        }
      });
  ProfileTally result = std::move(slots.front());
  for (std::size_t s = 1; s < slots.size(); ++s) result.merge(slots[s]);
  return result;
}

}  // namespace

NLambdaTable n_lambda_table(Rank rank, int jobs) {
  ProfileTally tally = profile_fold(rank, jobs, false);

  // cross-check the fiber counts against the basic-move class sizes
  PartitionCounts from_classes;
  for (const IdealClass& cls :
       equivalence_classes(rank, MoveKind::basic, jobs).classes)
    from_classes[*cls.label] +=
        static_cast<long long>(cls.ideals.size());
  if (!(from_classes == tally.by_lambda))
    throw ConsistencyError(
        "orbit-partition fibers and basic-move class sizes disagree at rank " +
        std::to_string(rank.n));

  const std::vector<Partition> expected_keys = partitions_of(rank.n + 1);
  if (tally.by_lambda.size() != expected_keys.size())
    throw ConsistencyError("not every partition of n+1 occurs as a label");
  long long total = 0;
  for (const auto& [key, count] : tally.by_lambda) total += count;
  if (static_cast<unsigned long long>(total) != catalan_number(rank.n + 1))
    throw ConsistencyError("class sizes do not sum to the Catalan number");
  return NLambdaTable{rank, std::move(tally.by_lambda)};
}

long long JointTable::at(int r, int s) const {
  return cells[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(s)];
}

long long JointTable::row_sum(int r) const {
  const auto& row = cells[static_cast<std::size_t>(r - 1)];
  return std::accumulate(row.begin(), row.end(), 0LL);
}

long long JointTable::column_sum(int s) const {
  long long sum = 0;
  for (const auto& row : cells) sum += row[static_cast<std::size_t>(s)];
  return sum;
}

long long JointTable::total() const {
  long long sum = 0;
  for (std::size_t r = 0; r < cells.size(); ++r) sum += row_sum(static_cast<int>(r) + 1);
  return sum;
}

JointTable joint_table(Rank rank, int jobs) {
  ProfileTally tally = profile_fold(rank, jobs, false);
  return JointTable{rank, std::move(tally.index_valleys)};
}

unsigned long long kreweras_number(const Partition& lambda, Rank rank) {
  const int N = rank.n + 1;
  if (lambda.size() != N)
    throw std::invalid_argument("partition does not partition n+1");
  // multiplicities a_j of part size j, 1 <= j <= n+1
  std::vector<int> multiplicity(static_cast<std::size_t>(N) + 1, 0);
  for (int part : lambda.parts()) ++multiplicity[static_cast<std::size_t>(part)];
  std::vector<unsigned long long> factorial(static_cast<std::size_t>(N) + 3, 1);
  for (std::size_t k = 1; k < factorial.size(); ++k)
    factorial[k] = factorial[k - 1] * k;
  unsigned long long value = factorial[static_cast<std::size_t>(N) + 1];  // (n+2)!
  for (int j = 1; j <= N; ++j)
    value /= factorial[static_cast<std::size_t>(multiplicity[static_cast<std::size_t>(j)])];
  value /= factorial[static_cast<std::size_t>(N + 1 - lambda.count())];  // (n+2-l)!
  if (value % static_cast<unsigned>(N + 1) != 0)
    throw ConsistencyError("Kreweras formula did not divide exactly for " +
                           format_partition(lambda));
  return value / static_cast<unsigned>(N + 1);
}

KrewerasTable kreweras_table(Rank rank, int jobs) {
  ProfileTally tally = profile_fold(rank, jobs, true);
  return KrewerasTable{rank, std::move(tally.by_kreweras)};
}

CheckReport narayana_check(Rank rank, int jobs) {
  ProfileTally tally = profile_fold(rank, jobs, false);
  CheckReport report{"narayana", true, {}};
  for (int s = 0; s <= rank.n; ++s) {
    long long observed = 0;
    for (std::size_t x = 0; x < tally.index_valleys.size(); ++x)
      observed += tally.index_valleys[x][static_cast<std::size_t>(s)];
    const unsigned long long expected = narayana_number(rank.n + 1, s + 1);
    const bool match = static_cast<unsigned long long>(observed) == expected;
    if (!match) report.ok = false;
    report.lines.push_back(
        "valleys=" + std::to_string(s) + ": ideals " +
        std::to_string(observed) + ", Narayana " + std::to_string(expected) +
        (match ? "" : "  MISMATCH"));
  }
  return report;
}

CheckReport index_corank_check(Rank rank, int jobs) {
  ProfileTally tally = profile_fold(rank, jobs, false);
  CheckReport report{"index_corank", true, {}};
  const int N = rank.n + 1;
  for (int k = 1; k <= N; ++k) {
    long long lhs = 0, rhs = 0;
    for (const auto& [lambda, count] : tally.by_lambda) {
      if (lambda.first() == k) {
        lhs += count;
        rhs += tally.by_lambda.at(dual_partition(lambda));
      }
    }
    const bool match = lhs == rhs;
    if (!match) report.ok = false;
    report.lines.push_back("largest part " + std::to_string(k) +
                           ": index side " + std::to_string(lhs) +
                           ", corank side " + std::to_string(rhs) +
                           (match ? "" : "  MISMATCH"));
  }
  long long bad_cells = 0;
  std::string first_bad;
  for (int r = 1; r <= N; ++r)
    for (int s = 0; s <= rank.n; ++s) {
      const long long lhs =
          tally.index_valleys[static_cast<std::size_t>(r - 1)]
                             [static_cast<std::size_t>(s)];
      const long long rhs =
          tally.corank_valleys[static_cast<std::size_t>(r - 1)]
                              [static_cast<std::size_t>(rank.n - s)];
      if (lhs != rhs) {
        ++bad_cells;
        if (first_bad.empty())
          first_bad = "(r=" + std::to_string(r) + ",s=" + std::to_string(s) +
                      "): " + std::to_string(lhs) + " vs " +
                      std::to_string(rhs);
      }
    }
  if (bad_cells) {
    report.ok = false;
    report.lines.push_back("two-variable refinement fails at " +
                           std::to_string(bad_cells) + " cells, first " +
                           first_bad);
  } else {
    report.lines.push_back("two-variable refinement holds at all " +
                           std::to_string(N * N) + " cells");
  }
  return report;
}

CheckReport antidiagonal_report(Rank rank, int jobs) {
  const JointTable table = joint_table(rank, jobs);
  CheckReport report{"antidiagonal", true, {}};
  for (int s = 0; s <= rank.n; ++s) {
    const long long observed = table.at(s + 1, s);
    const unsigned long long conjectured =
        binomial_coefficient(rank.n + s, rank.n - s);
    report.lines.push_back(
        "cell (largest=" + std::to_string(s + 1) + ", valleys=" +
        std::to_string(s) + "): observed " + std::to_string(observed) +
        ", conjectured binomial " + std::to_string(conjectured) +
        (static_cast<unsigned long long>(observed) == conjectured
             ? "  (match)"
             : "  (differs)"));
  }
  return report;
}

}  // namespace adnil
