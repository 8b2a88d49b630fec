#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "adnil/core.hpp"

namespace adnil {

enum class MoveKind { basic, inner, outer };
enum class Side { left, right };
enum class MoveDirection { remove, add };

std::string_view to_string(MoveKind kind);
std::string_view to_string(Side side);
std::string_view to_string(MoveDirection direction);
MoveKind parse_move_kind(std::string_view text);

// One step of a move sequence.  `removed` is always a minimal root of the
// larger ideal of the pair; `side` names the endpoint condition that
// licensed the step.
struct Move {
  MoveKind kind;
  Side side;
  Root removed;
  MoveDirection direction;

  friend bool operator==(const Move&, const Move&) = default;
};

// Licensing condition for removing the minimal root [a,b], per kind and side.
//
//   basic left   a >= 2 and a-1 is neither a left nor a right endpoint
//   basic right  b <= n-1 and b+1 is neither a left nor a right endpoint
//   inner left   a >= 2 and a-1 is not a right endpoint
//   inner right  b <= n-1 and b+1 is not a left endpoint
//   outer left   a >= 2 and a-1 is not a left endpoint
//   outer right  b <= n-1 and b+1 is not a right endpoint
//
// Endpoints are those of the antichain of minimal roots.  Basic holds at a
// side exactly when inner and outer both hold there; this factorisation is
// what the exhaustive cross-check in the tests pins down.
bool move_licensed(const RootIdeal& ideal, Root minimal, Side side,
                   MoveKind kind);

// All (minimal root, side) pairs whose removal the given kind licenses.
std::vector<std::pair<Root, Side>> move_candidates(const RootIdeal& ideal,
                                                   MoveKind kind);
std::vector<std::pair<Root, Side>> basic_move_candidates(const RootIdeal& i);
std::vector<std::pair<Root, Side>> inner_move_candidates(const RootIdeal& i);
std::vector<std::pair<Root, Side>> outer_move_candidates(const RootIdeal& i);

// The ideal obtained by dropping the minimal root r (no licensing check).
RootIdeal remove_minimal_root(const RootIdeal& ideal, Root r);

// Applies a move, re-checking its licensing condition; throws
// invalid_argument if the move is not licensed on this ideal.
RootIdeal apply_move(const RootIdeal& ideal, const Move& move);

// Replays a move sequence from `start`, validating every step; returns all
// intermediate ideals including start and end.
std::vector<RootIdeal> replay(const RootIdeal& start,
                              const std::vector<Move>& moves);

// Undirected adjacency: removal steps out of `ideal` plus removal steps into
// it, as (move, neighbor) pairs ordered by the neighbor's canonical key.
std::vector<std::pair<Move, RootIdeal>> move_neighbors(const RootIdeal& ideal,
                                                       MoveKind kind);
std::vector<RootIdeal> neighbors(const RootIdeal& ideal, MoveKind kind);

// One equivalence class of the move graph.
struct IdealClass {
  RootIdeal representative;            // smallest ideal in canonical order
  std::optional<Partition> label;      // the orbit partition, basic kind only
  std::vector<RootIdeal> ideals;       // canonical order
};

struct ClassTable {
  Rank rank;
  MoveKind kind;
  std::vector<IdealClass> classes;     // ordered by representative
};

// Connected components of the move graph over all ideals of the rank.  For
// the basic kind every class is labelled with its (verified constant) orbit
// partition; a non-constant label raises ConsistencyError.  Edge generation
// is sharded across `jobs` threads; the merge is a deterministic
// single-threaded union-find pass.
ClassTable equivalence_classes(Rank rank, MoveKind kind, int jobs = 1);

struct NormalizationResult {
  RootIdeal parabolic;      // all minimal roots simple
  std::vector<Move> path;   // shortest witness, validated by replay
};

// Walks the basic-move class of `ideal` to a parabolic nilradical and
// returns a shortest move path to it.
NormalizationResult normalize_to_parabolic(const RootIdeal& ideal);

// Shortest move path between two ideals of the same class; throws
// invalid_argument when `to` is not reachable.
std::vector<Move> move_path(const RootIdeal& from, const RootIdeal& to,
                            MoveKind kind);

// Trace format: one move per line, "kind side [a,b] remove|add".
std::string format_move(const Move& move);
Move parse_move(std::string_view line);

}  // namespace adnil
