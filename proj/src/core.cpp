#include "adnil/core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace adnil {

bool root_leq(Root r1, Root r2) { return r2.i <= r1.i && r1.j <= r2.j; }

std::vector<Root> positive_roots(Rank rank) {
  std::vector<Root> roots;
  roots.reserve(static_cast<std::size_t>(rank.n) * (rank.n + 1) / 2);
  for (int i = 1; i <= rank.n; ++i)
    for (int j = i; j <= rank.n; ++j) roots.push_back(Root{i, j});
  return roots;
}

RootIdeal::RootIdeal(Rank rank, std::vector<Root> min_roots)
    : rank_(rank), min_roots_(std::move(min_roots)) {
  std::sort(min_roots_.begin(), min_roots_.end());
  for (const Root& r : min_roots_) {
    if (r.i < 1 || r.i > r.j || r.j > rank_.n)
      throw std::invalid_argument("root " + format_root(r) +
                                  " is not a positive root of A_" +
                                  std::to_string(rank_.n));
  }
  for (std::size_t k = 1; k < min_roots_.size(); ++k) {
    const Root &prev = min_roots_[k - 1], &cur = min_roots_[k];
    // strictly increasing left AND right endpoints <=> antichain
    if (prev.i == cur.i || prev.j >= cur.j)
      throw std::invalid_argument("roots " + format_root(prev) + " and " +
                                  format_root(cur) + " are comparable");
  }
}

bool RootIdeal::contains(Root r) const {
  for (const Root& m : min_roots_)
    if (root_leq(m, r)) return true;
  return false;
}

bool RootIdeal::is_parabolic() const {
  return std::all_of(min_roots_.begin(), min_roots_.end(),
                     [](Root r) { return r.i == r.j; });
}

std::vector<Root> closure(const RootIdeal& ideal) {
  std::vector<Root> result;
  for (Root r : positive_roots(ideal.rank()))
    if (ideal.contains(r)) result.push_back(r);
  return result;
}

RootIdeal minimal_roots(Rank rank, std::vector<Root> upward_closed) {
  std::sort(upward_closed.begin(), upward_closed.end());
  upward_closed.erase(
      std::unique(upward_closed.begin(), upward_closed.end()),
      upward_closed.end());
  auto member = [&](Root r) {
    return std::binary_search(upward_closed.begin(), upward_closed.end(), r);
  };
  for (const Root& r : upward_closed) {
    if (r.i < 1 || r.i > r.j || r.j > rank.n)
      throw std::invalid_argument("root " + format_root(r) +
                                  " is not a positive root of A_" +
                                  std::to_string(rank.n));
    // Closure under covers suffices: [i-1,j] and [i,j+1].
    if (r.i > 1 && !member(Root{r.i - 1, r.j}))
      throw std::invalid_argument("set is not upward closed: contains " +
                                  format_root(r) + " but not " +
                                  format_root(Root{r.i - 1, r.j}));
    if (r.j < rank.n && !member(Root{r.i, r.j + 1}))
      throw std::invalid_argument("set is not upward closed: contains " +
                                  format_root(r) + " but not " +
                                  format_root(Root{r.i, r.j + 1}));
  }
  std::vector<Root> minimal;
  for (const Root& r : upward_closed) {
    bool has_lower = (r.i + 1 <= r.j && member(Root{r.i + 1, r.j})) ||
                     (r.i <= r.j - 1 && member(Root{r.i, r.j - 1}));
    if (!has_lower) minimal.push_back(r);
  }
  return RootIdeal(rank, std::move(minimal));
}

bool is_j_stable(const RootIdeal& ideal, int j) {
  if (j < 1 || j > ideal.rank().n)
    throw std::invalid_argument("stability index " + std::to_string(j) +
                                " out of range 1.." +
                                std::to_string(ideal.rank().n));
  for (const Root& r : ideal.min_roots())
    if (r.i == j || r.j == j) return false;
  return true;
}

// --- ballot sequences -------------------------------------------------------

BallotSequence::BallotSequence(std::string bits) : bits_(std::move(bits)) {
  if (bits_.empty() || bits_.size() % 2 != 0)
    throw std::invalid_argument("ballot word must have positive even length");
  int height = 0;
  for (char c : bits_) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("ballot word may contain only 0 and 1");
    height += (c == '1') ? 1 : -1;
    if (height < 0)
      throw std::invalid_argument("ballot word has a negative prefix height");
  }
  if (height != 0)
    throw std::invalid_argument("ballot word needs equally many ones and zeros");
}

std::vector<int> BallotSequence::heights() const {
  std::vector<int> h;
  h.reserve(bits_.size());
  int height = 0;
  for (char c : bits_) {
    height += (c == '1') ? 1 : -1;
    h.push_back(height);
  }
  return h;
}

BallotSequence ideal_to_ballot(const RootIdeal& ideal) {
  const int N = ideal.rank().matrix_size();
  std::string word;
  word.reserve(2 * N);
  int a_prev = 0, b_prev = 0;
  for (const Root& r : ideal.min_roots()) {
    word.append(static_cast<std::size_t>(r.j - b_prev), '1');
    word.append(static_cast<std::size_t>(r.i - a_prev), '0');
    a_prev = r.i;
    b_prev = r.j;
  }
  word.append(static_cast<std::size_t>(N - b_prev), '1');
  word.append(static_cast<std::size_t>(N - a_prev), '0');
  return BallotSequence(std::move(word));
}

RootIdeal ballot_to_ideal(const BallotSequence& word) {
  const std::string& bits = word.bits();
  // A "01" factor is a concave corner of the path; after the '0' the path
  // sits at (zeros-so-far, ones-so-far), which is the minimal root.
  std::vector<Root> corners;
  int ones = 0, zeros = 0;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] == '1')
      ++ones;
    else {
      ++zeros;
      if (k + 1 < bits.size() && bits[k + 1] == '1')
        corners.push_back(Root{zeros, ones});
    }
  }
  return RootIdeal(word.rank(), std::move(corners));
}

int valleys(const BallotSequence& word) {
  const std::string& bits = word.bits();
  int count = 0;
  for (std::size_t k = 0; k + 1 < bits.size(); ++k)
    if (bits[k] == '0' && bits[k + 1] == '1') ++count;
  return count;
}

int max_height(const BallotSequence& word) {
  int best = 0, height = 0;
  for (char c : word.bits()) {
    height += (c == '1') ? 1 : -1;
    best = std::max(best, height);
  }
  return best;
}

// --- enumeration -------------------------------------------------------------

// Key encoding: bit (2N-1-k) is set iff position k of the word is '0'.  The
// most significant differing bit then decides numeric order exactly like the
// first differing letter decides lexicographic order with '1' < '0'.
std::uint32_t ballot_key(const BallotSequence& word) {
  const std::string& bits = word.bits();
  std::uint32_t key = 0;
  const std::size_t L = bits.size();
  for (std::size_t k = 0; k < L; ++k)
    if (bits[k] == '0') key |= 1u << (L - 1 - k);
  return key;
}

std::uint32_t enumeration_key(const RootIdeal& ideal) {
  return ballot_key(ideal_to_ballot(ideal));
}

RootIdeal ideal_from_key(Rank rank, std::uint32_t key) {
  const int L = 2 * rank.matrix_size();
  std::string bits(static_cast<std::size_t>(L), '1');
  for (int k = 0; k < L; ++k)
    if (key & (1u << (L - 1 - k))) bits[static_cast<std::size_t>(k)] = '0';
  return ballot_to_ideal(BallotSequence(std::move(bits)));
}

namespace {

void check_enumeration_rank(Rank rank) {
  if (rank.n > kEnumerationRankLimit)
    throw std::invalid_argument("rank " + std::to_string(rank.n) +
                                " exceeds the enumeration limit " +
                                std::to_string(kEnumerationRankLimit));
}

void gen_ballot_keys(int N, int pos, int ones, int zeros, std::uint32_t acc,
                     std::vector<std::uint32_t>& out) {
  const int L = 2 * N;
  if (pos == L) {
    out.push_back(acc);
    return;
  }
  if (ones < N) gen_ballot_keys(N, pos + 1, ones + 1, zeros, acc, out);
  if (zeros < ones)
    gen_ballot_keys(N, pos + 1, ones, zeros + 1,
                    acc | (1u << (L - 1 - pos)), out);
}

}  // namespace

std::vector<std::uint32_t> enumerate_ideal_keys(Rank rank) {
  check_enumeration_rank(rank);
  std::vector<std::uint32_t> keys;
  gen_ballot_keys(rank.matrix_size(), 0, 0, 0, 0, keys);
  return keys;
}

std::vector<RootIdeal> enumerate_ideals(Rank rank) {
  std::vector<RootIdeal> ideals;
  for (std::uint32_t key : enumerate_ideal_keys(rank))
    ideals.push_back(ideal_from_key(rank, key));
  return ideals;
}

// --- partitions --------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1)
      throw std::invalid_argument("partition parts must be positive");
    if (k > 0 && parts_[k - 1] < parts_[k])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition dual_partition(const Partition& p) {
  std::vector<int> dual;
  for (int j = 1; j <= p.first(); ++j) {
    int count = 0;
    for (int part : p.parts())
      if (part >= j) ++count;
    dual.push_back(count);
  }
  return Partition(std::move(dual));
}

bool dominance_leq(const Partition& p, const Partition& q) {
  if (p.size() != q.size())
    throw std::invalid_argument(
        "dominance order compares partitions of equal size");
  long long sum_p = 0, sum_q = 0;
  const std::size_t rows = std::max(p.parts().size(), q.parts().size());
  for (std::size_t k = 0; k < rows; ++k) {
    sum_p += k < p.parts().size() ? p.parts()[k] : 0;
    sum_q += k < q.parts().size() ? q.parts()[k] : 0;
    if (sum_p > sum_q) return false;
  }
  return true;
}

bool PartitionTableLess::operator()(const Partition& a,
                                    const Partition& b) const {
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                      a.parts().begin(), a.parts().end());
}

Composition cut_composition(Rank rank, const std::vector<int>& cut_points) {
  for (std::size_t k = 0; k < cut_points.size(); ++k) {
    if (cut_points[k] < 1 || cut_points[k] > rank.n)
      throw std::invalid_argument("cut point out of range 1.." +
                                  std::to_string(rank.n));
    if (k > 0 && cut_points[k - 1] >= cut_points[k])
      throw std::invalid_argument("cut points must be strictly increasing");
  }
  Composition c;
  int prev = 0;
  for (int j : cut_points) {
    c.parts.push_back(j - prev);
    prev = j;
  }
  c.parts.push_back(rank.n + 1 - prev);
  return c;
}

RootIdeal parabolic_ideal(Rank rank, const std::vector<int>& cut_points) {
  cut_composition(rank, cut_points);  // range and monotonicity checks
  std::vector<Root> simples;
  simples.reserve(cut_points.size());
  for (int j : cut_points) simples.push_back(Root{j, j});
  return RootIdeal(rank, std::move(simples));
}

Partition mu(const Composition& c) {
  std::vector<int> parts = c.parts;
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

// --- text formats --------------------------------------------------------------

namespace {

void skip_spaces(std::string_view& s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
}

bool eat(std::string_view& s, char c) {
  skip_spaces(s);
  if (s.empty() || s.front() != c) return false;
  s.remove_prefix(1);
  return true;
}

int parse_int(std::string_view& s) {
  skip_spaces(s);
  int value = 0;
  std::size_t used = 0;
  while (used < s.size() && std::isdigit(static_cast<unsigned char>(s[used]))) {
    value = value * 10 + (s[used] - '0');
    ++used;
  }
  if (used == 0) throw std::invalid_argument("expected an integer");
  s.remove_prefix(used);
  return value;
}

}  // namespace

std::string format_root(Root r) {
  return "[" + std::to_string(r.i) + "," + std::to_string(r.j) + "]";
}

std::string format_ideal(const RootIdeal& ideal) {
  if (ideal.empty()) return "-";
  std::string out;
  for (std::size_t k = 0; k < ideal.min_roots().size(); ++k) {
    if (k > 0) out += ",";
    out += format_root(ideal.min_roots()[k]);
  }
  return out;
}

RootIdeal parse_ideal(Rank rank, std::string_view text) {
  std::string_view s = text;
  skip_spaces(s);
  if (!s.empty() && s.front() == '-') {
    s.remove_prefix(1);
    skip_spaces(s);
    if (!s.empty())
      throw std::invalid_argument("trailing characters after empty ideal '-'");
    return RootIdeal(rank, {});
  }
  std::vector<Root> roots;
  while (true) {
    if (!eat(s, '['))
      throw std::invalid_argument("expected '[' in ideal literal: " +
                                  std::string(text));
    int i = parse_int(s);
    int j = i;  // "[a]" is shorthand for the simple root [a,a]
    if (eat(s, ',')) j = parse_int(s);
    if (!eat(s, ']'))
      throw std::invalid_argument("expected ']' in ideal literal: " +
                                  std::string(text));
    roots.push_back(Root{i, j});
    skip_spaces(s);
    if (s.empty()) break;
    if (!eat(s, ','))
      throw std::invalid_argument("expected ',' between roots: " +
                                  std::string(text));
  }
  return RootIdeal(rank, std::move(roots));
}

std::string format_partition(const Partition& p) {
  std::string out = "[";
  for (std::size_t k = 0; k < p.parts().size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(p.parts()[k]);
  }
  return out + "]";
}

Partition parse_partition(std::string_view text) {
  std::string_view s = text;
  if (!eat(s, '['))
    throw std::invalid_argument("expected '[' in partition literal");
  std::vector<int> parts;
  skip_spaces(s);
  if (!s.empty() && s.front() != ']') {
    parts.push_back(parse_int(s));
    while (eat(s, ',')) parts.push_back(parse_int(s));
  }
  if (!eat(s, ']'))
    throw std::invalid_argument("expected ']' in partition literal");
  skip_spaces(s);
  if (!s.empty())
    throw std::invalid_argument("trailing characters in partition literal");
  return Partition(std::move(parts));
}

std::string format_sequences(const std::vector<std::vector<int>>& seqs) {
  std::string out;
  for (const auto& seq : seqs) {
    out += "(";
    for (std::size_t k = 0; k < seq.size(); ++k) {
      if (k > 0) out += ",";
      out += std::to_string(seq[k]);
    }
    out += ")";
  }
  return out;
}

}  // namespace adnil
