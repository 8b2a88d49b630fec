#include "adnil/moves.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "adnil/jordan.hpp"
#include "adnil/parallel.hpp"

namespace adnil {

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::basic: return "basic";
    case MoveKind::inner: return "inner";
    case MoveKind::outer: return "outer";
  }
  return "?";
}

std::string_view to_string(Side side) {
  return side == Side::left ? "left" : "right";
}

std::string_view to_string(MoveDirection direction) {
  return direction == MoveDirection::remove ? "remove" : "add";
}

MoveKind parse_move_kind(std::string_view text) {
  if (text == "basic") return MoveKind::basic;
  if (text == "inner") return MoveKind::inner;
  if (text == "outer") return MoveKind::outer;
  throw std::invalid_argument("unknown move kind: " + std::string(text));
}

namespace {

bool has_left_endpoint(const RootIdeal& ideal, int j) {
  for (const Root& r : ideal.min_roots())
    if (r.i == j) return true;
  return false;
}

bool has_right_endpoint(const RootIdeal& ideal, int j) {
  for (const Root& r : ideal.min_roots())
    if (r.j == j) return true;
  return false;
}

bool is_minimal(const RootIdeal& ideal, Root r) {
  return std::find(ideal.min_roots().begin(), ideal.min_roots().end(), r) !=
         ideal.min_roots().end();
}

}  // namespace

bool move_licensed(const RootIdeal& ideal, Root minimal, Side side,
                   MoveKind kind) {
  if (!is_minimal(ideal, minimal))
    throw std::invalid_argument(format_root(minimal) +
                                " is not a minimal root of " +
                                format_ideal(ideal));
  const int n = ideal.rank().n;
  if (side == Side::left) {
    const int a = minimal.i;
    if (a < 2) return false;
    switch (kind) {
      case MoveKind::basic:
        return !has_left_endpoint(ideal, a - 1) &&
               !has_right_endpoint(ideal, a - 1);
      case MoveKind::inner:
        return !has_right_endpoint(ideal, a - 1);
      case MoveKind::outer:
        return !has_left_endpoint(ideal, a - 1);
    }
  } else {
    const int b = minimal.j;
    if (b > n - 1) return false;
    switch (kind) {
      case MoveKind::basic:
        return !has_left_endpoint(ideal, b + 1) &&
               !has_right_endpoint(ideal, b + 1);
      case MoveKind::inner:
        return !has_left_endpoint(ideal, b + 1);
      case MoveKind::outer:
        return !has_right_endpoint(ideal, b + 1);
    }
  }
  return false;
}

std::vector<std::pair<Root, Side>> move_candidates(const RootIdeal& ideal,
                                                   MoveKind kind) {
  std::vector<std::pair<Root, Side>> result;
  for (const Root& r : ideal.min_roots())
    for (Side side : {Side::left, Side::right})
      if (move_licensed(ideal, r, side, kind)) result.emplace_back(r, side);
  return result;
}

std::vector<std::pair<Root, Side>> basic_move_candidates(const RootIdeal& i) {
  return move_candidates(i, MoveKind::basic);
}
std::vector<std::pair<Root, Side>> inner_move_candidates(const RootIdeal& i) {
  return move_candidates(i, MoveKind::inner);
}
std::vector<std::pair<Root, Side>> outer_move_candidates(const RootIdeal& i) {
  return move_candidates(i, MoveKind::outer);
}

RootIdeal remove_minimal_root(const RootIdeal& ideal, Root r) {
  if (!is_minimal(ideal, r))
    throw std::invalid_argument(format_root(r) + " is not a minimal root of " +
                                format_ideal(ideal));
  std::vector<Root> next;
  for (const Root& m : ideal.min_roots())
    if (!(m == r)) next.push_back(m);
  // Dropping [a,b] uncovers [a-1,b] and/or [a,b+1] unless blocked by the
  // boundary or by an existing endpoint.
  if (r.i > 1 && !has_left_endpoint(ideal, r.i - 1))
    next.push_back(Root{r.i - 1, r.j});
  if (r.j < ideal.rank().n && !has_right_endpoint(ideal, r.j + 1))
    next.push_back(Root{r.i, r.j + 1});
  return RootIdeal(ideal.rank(), std::move(next));
}

RootIdeal apply_move(const RootIdeal& ideal, const Move& move) {
  if (move.direction == MoveDirection::remove) {
    if (!move_licensed(ideal, move.removed, move.side, move.kind))
      throw std::invalid_argument("move " + format_move(move) +
                                  " is not licensed on " + format_ideal(ideal));
    return remove_minimal_root(ideal, move.removed);
  }
  // Addition: rebuild the larger ideal and validate by removing again.
  if (ideal.contains(move.removed))
    throw std::invalid_argument("cannot add " + format_root(move.removed) +
                                ": already contained in " +
                                format_ideal(ideal));
  std::vector<Root> larger;
  larger.push_back(move.removed);
  for (const Root& m : ideal.min_roots())
    if (!root_leq(move.removed, m)) larger.push_back(m);
  RootIdeal bigger(ideal.rank(), std::move(larger));
  if (!move_licensed(bigger, move.removed, move.side, move.kind) ||
      !(remove_minimal_root(bigger, move.removed) == ideal))
    throw std::invalid_argument("move " + format_move(move) +
                                " is not licensed on " + format_ideal(ideal));
  return bigger;
}

std::vector<RootIdeal> replay(const RootIdeal& start,
                              const std::vector<Move>& moves) {
  std::vector<RootIdeal> trail{start};
  for (const Move& move : moves) trail.push_back(apply_move(trail.back(), move));
  return trail;
}

std::vector<std::pair<Move, RootIdeal>> move_neighbors(const RootIdeal& ideal,
                                                       MoveKind kind) {
  std::vector<std::pair<Move, RootIdeal>> result;
  std::unordered_set<std::uint32_t> seen;
  for (const auto& [root, side] : move_candidates(ideal, kind)) {
    RootIdeal target = remove_minimal_root(ideal, root);
    if (seen.insert(enumeration_key(target)).second)
      result.emplace_back(Move{kind, side, root, MoveDirection::remove},
                          std::move(target));
  }
  // Additions: roots whose upward covers already lie in the ideal.
  const int n = ideal.rank().n;
  for (Root beta : positive_roots(ideal.rank())) {
    if (ideal.contains(beta)) continue;
    if (beta.i > 1 && !ideal.contains(Root{beta.i - 1, beta.j})) continue;
    if (beta.j < n && !ideal.contains(Root{beta.i, beta.j + 1})) continue;
    std::vector<Root> larger;
    larger.push_back(beta);
    for (const Root& m : ideal.min_roots())
      if (!root_leq(beta, m)) larger.push_back(m);
    RootIdeal bigger(ideal.rank(), std::move(larger));
    for (Side side : {Side::left, Side::right}) {
      if (move_licensed(bigger, beta, side, kind)) {
        if (seen.insert(enumeration_key(bigger)).second)
          result.emplace_back(Move{kind, side, beta, MoveDirection::add},
                              std::move(bigger));
        break;
      }
    }
  }
  std::sort(result.begin(), result.end(),
            [](const auto& x, const auto& y) {
              return enumeration_key(x.second) < enumeration_key(y.second);
            });
  return result;
}

std::vector<RootIdeal> neighbors(const RootIdeal& ideal, MoveKind kind) {
  std::vector<RootIdeal> result;
  for (auto& [move, target] : move_neighbors(ideal, kind))
    result.push_back(std::move(target));
  return result;
}

// --- equivalence classes ------------------------------------------------------

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t size) : parent(size) {
    for (std::size_t k = 0; k < size; ++k) parent[k] = static_cast<int>(k);
  }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // the smaller index wins, so the root is the canonical representative
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

ClassTable equivalence_classes(Rank rank, MoveKind kind, int jobs) {
  const std::vector<std::uint32_t> keys = enumerate_ideal_keys(rank);
  std::unordered_map<std::uint32_t, int> index;
  index.reserve(keys.size() * 2);
  for (std::size_t k = 0; k < keys.size(); ++k)
    index.emplace(keys[k], static_cast<int>(k));

  // Removal edges per ideal, generated shard-parallel; the union-find merge
  // below is a single deterministic pass.
  std::vector<std::vector<std::uint32_t>> targets(keys.size());
  for_each_shard(keys.size(), jobs,
                 [&](std::size_t, std::size_t begin, std::size_t end) {
                   for (std::size_t k = begin; k < end; ++k) {
                     RootIdeal ideal = ideal_from_key(rank, keys[k]);
                     for (const auto& [root, side] :
                          move_candidates(ideal, kind)) {
                       std::uint32_t target = enumeration_key(
                           remove_minimal_root(ideal, root));
                       targets[k].push_back(target);
                     }
                   }
                 });

  UnionFind uf(keys.size());
  for (std::size_t k = 0; k < keys.size(); ++k)
    for (std::uint32_t t : targets[k])
      uf.unite(static_cast<int>(k), index.at(t));

  std::vector<Partition> labels;
  if (kind == MoveKind::basic) {
    labels.resize(keys.size());
    for_each_shard(keys.size(), jobs,
                   [&](std::size_t, std::size_t begin, std::size_t end) {
                     for (std::size_t k = begin; k < end; ++k)
                       labels[k] =
                           gerstenhaber_partition(ideal_from_key(rank, keys[k]));
                   });
  }

  std::unordered_map<int, std::size_t> class_of_root;
  ClassTable table{rank, kind, {}};
  for (std::size_t k = 0; k < keys.size(); ++k) {
    const int root = uf.find(static_cast<int>(k));
    RootIdeal ideal = ideal_from_key(rank, keys[k]);
    auto it = class_of_root.find(root);
    if (it == class_of_root.end()) {
      // first member in enumeration order == the representative
      IdealClass cls{ideal, std::nullopt, {}};
      if (kind == MoveKind::basic) cls.label = labels[k];
      cls.ideals.push_back(std::move(ideal));
      class_of_root.emplace(root, table.classes.size());
      table.classes.push_back(std::move(cls));
    } else {
      IdealClass& cls = table.classes[it->second];
      if (kind == MoveKind::basic && !(labels[k] == *cls.label))
        throw ConsistencyError(
            "orbit partition is not constant on a basic-move class: " +
            format_ideal(cls.representative) + " has " +
            format_partition(*cls.label) + " but " + format_ideal(ideal) +
            " has " + format_partition(labels[k]));
      cls.ideals.push_back(std::move(ideal));
    }
  }
  return table;
}

// --- normalization -------------------------------------------------------------

namespace {

// BFS over one move class; stops at the first ideal satisfying `done`.
std::optional<std::vector<Move>> bfs_path(
    const RootIdeal& start, MoveKind kind,
    const std::function<bool(const RootIdeal&)>& done) {
  struct Visit {
    std::uint32_t parent;
    Move move;
  };
  const Rank rank = start.rank();
  const std::uint32_t start_key = enumeration_key(start);
  std::unordered_map<std::uint32_t, Visit> visited;
  visited.emplace(start_key, Visit{start_key, {}});
  std::deque<std::uint32_t> queue{start_key};
  std::optional<std::uint32_t> found;
  if (done(start)) {
    found = start_key;
  } else {
    while (!queue.empty() && !found) {
      const std::uint32_t key = queue.front();
      queue.pop_front();
      RootIdeal ideal = ideal_from_key(rank, key);
      for (auto& [move, target] : move_neighbors(ideal, kind)) {
        const std::uint32_t tkey = enumeration_key(target);
        if (visited.count(tkey)) continue;
        visited.emplace(tkey, Visit{key, move});
        if (done(target)) {
          found = tkey;
          break;
        }
        queue.push_back(tkey);
      }
    }
  }
  if (!found) return std::nullopt;
  std::vector<Move> path;
  for (std::uint32_t key = *found; key != start_key;) {
    const Visit& v = visited.at(key);
    path.push_back(v.move);
    key = v.parent;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

NormalizationResult normalize_to_parabolic(const RootIdeal& ideal) {
  auto path = bfs_path(ideal, MoveKind::basic,
                       [](const RootIdeal& i) { return i.is_parabolic(); });
  if (!path)
    throw ConsistencyError("no parabolic nilradical reachable from " +
                           format_ideal(ideal));
  std::vector<RootIdeal> trail = replay(ideal, *path);  // re-validates moves
  const RootIdeal& parabolic = trail.back();
  std::vector<int> cuts;
  for (const Root& r : parabolic.min_roots()) cuts.push_back(r.i);
  const Partition mu_p = mu(cut_composition(ideal.rank(), cuts));
  if (!(dual_partition(mu_p) == gerstenhaber_partition(ideal)))
    throw ConsistencyError("normalization of " + format_ideal(ideal) +
                           " reached " + format_ideal(parabolic) +
                           " whose dual composition partition differs from "
                           "the orbit partition");
  return NormalizationResult{parabolic, std::move(*path)};
}

std::vector<Move> move_path(const RootIdeal& from, const RootIdeal& to,
                            MoveKind kind) {
  if (!(from.rank() == to.rank()))
    throw std::invalid_argument("move_path endpoints have different ranks");
  const std::uint32_t goal = enumeration_key(to);
  auto path = bfs_path(from, kind, [&](const RootIdeal& i) {
    return enumeration_key(i) == goal;
  });
  if (!path)
    throw std::invalid_argument(format_ideal(to) + " is not reachable from " +
                                format_ideal(from) + " by " +
                                std::string(to_string(kind)) + " moves");
  return *path;
}

std::string format_move(const Move& move) {
  std::string out;
  out += to_string(move.kind);
  out += ' ';
  out += to_string(move.side);
  out += ' ';
  out += format_root(move.removed);
  out += ' ';
  out += to_string(move.direction);
  return out;
}

Move parse_move(std::string_view line) {
  std::vector<std::string> words;
  std::string current;
  for (char c : line) {
    if (c == ' ') {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  if (words.size() != 4)
    throw std::invalid_argument("move line needs 4 fields: " +
                                std::string(line));
  Move move;
  move.kind = parse_move_kind(words[0]);
  if (words[1] == "left")
    move.side = Side::left;
  else if (words[1] == "right")
    move.side = Side::right;
  else
    throw std::invalid_argument("unknown side: " + words[1]);
  std::string_view root_text = words[2];
  if (root_text.size() < 5 || root_text.front() != '[' ||
      root_text.back() != ']')
    throw std::invalid_argument("bad root literal: " + words[2]);
  const auto comma = root_text.find(',');
  if (comma == std::string_view::npos)
    throw std::invalid_argument("bad root literal: " + words[2]);
  move.removed.i = std::stoi(std::string(root_text.substr(1, comma - 1)));
  move.removed.j = std::stoi(std::string(
      root_text.substr(comma + 1, root_text.size() - comma - 2)));
  if (words[3] == "remove")
    move.direction = MoveDirection::remove;
  else if (words[3] == "add")
    move.direction = MoveDirection::add;
  else
    throw std::invalid_argument("unknown direction: " + words[3]);
  return move;
}

}  // namespace adnil
