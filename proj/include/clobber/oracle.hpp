#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "clobber/board.hpp"

namespace clobber {

inline constexpr std::size_t kDefaultOracleLimit = 16;
inline constexpr std::size_t kDefaultSweepLimit = 14;

struct SearchStats {
  std::uint64_t states_visited = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t max_depth = 0;
};

/// Exhaustive game-tree search with a transposition table. Positions are
/// memoised on the whole cell string (one table per topology), so one Oracle
/// can be reused across many boards; values never depend on earlier calls.
class Oracle {
 public:
  explicit Oracle(std::size_t limit = kDefaultOracleLimit);

  /// Smallest pawn count reachable from `c`. Throws Error(LimitExceeded) for n > limit.
  std::size_t value(const Conformation& c);

  /// First optimal line under legal_moves ordering.
  Strategy strategy(const Conformation& c);

  const SearchStats& stats() const noexcept { return stats_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t search(const Conformation& c, std::uint64_t depth);
  void check_limit(const Conformation& c) const;

  std::size_t limit_;
  std::unordered_map<std::uint64_t, std::uint8_t> memo_[2];
  SearchStats stats_;
};

std::size_t oracle_value(const Conformation& c, std::size_t limit = kDefaultOracleLimit);
Strategy oracle_strategy(const Conformation& c, std::size_t limit = kDefaultOracleLimit);

/// Plain depth-first search over every move sequence, no memo. Exponential;
/// only for cross-checking the memoised search on small boards.
std::size_t exhaustive_value(const Conformation& c, std::size_t limit = 10);

/// Lexicographically smallest rendering over the board's symmetries: color
/// swap and reversal, plus rotations on a cycle.
std::string canonical_form(const Conformation& c);

struct SweepResult {
  std::size_t n = 0;
  Topology topology = Topology::Line;
  bool both_colors = false;
  std::size_t classes = 0;  // symmetry classes evaluated
  std::size_t max_value = 0;
  std::vector<std::string> argmax;  // canonical forms, sorted
};

/// Maximum reducibility value over all fully occupied boards of size n.
SweepResult sweep_max(std::size_t n, Topology topology, bool require_both_colors,
                      std::size_t limit = kDefaultSweepLimit);

/// Columns: n,topology,max_value,count_of_argmax,one_argmax_rendered
void write_sweep_csv(std::ostream& out, std::span<const SweepResult> rows);

}  // namespace clobber
