#pragma once

// Solitaire Clobber on a line or cycle as an optimisation over words.
//
// Every move crosses one separation (edge) between neighbouring cells, and an
// edge can be crossed at most once because the mover's origin stays empty.
// A play is therefore described by a move word with one symbol per edge:
//
//   '.'  the edge is never crossed (a cut)
//   '>'  a pawn crosses it rightwards
//   '<'  a pawn crosses it leftwards
//
// The board itself is described by its edge word, one symbol per edge:
//
//   's'  both end cells hold the same color
//   'd'  the end cells hold different colors
//
// A move word is playable on a board exactly when the joint word avoids the
// finite ForbiddenPatternSet below. Between two cuts the symbols read >^a <^b:
// one pawn runs right, one runs left, and they meet in a single cell, so each
// cut-free block collapses to one pawn. The reducibility value is the number of
// blocks: cuts + 1 on a line, cuts on a cycle (where at least one cut is
// mandatory).

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clobber/board.hpp"

namespace clobber {

enum class EdgeSymbol : std::uint8_t { Same, Differ };
enum class MoveSymbol : std::uint8_t { Cut, Right, Left };

char to_char(EdgeSymbol e);
char to_char(MoveSymbol m);

struct EdgeWord {
  std::vector<EdgeSymbol> symbols;
  Topology topology = Topology::Line;

  std::size_t size() const noexcept { return symbols.size(); }
  friend bool operator==(const EdgeWord&, const EdgeWord&) = default;
};

struct MoveWord {
  std::vector<MoveSymbol> symbols;
  Topology topology = Topology::Line;

  std::size_t size() const noexcept { return symbols.size(); }
  std::size_t cuts() const noexcept;
  friend bool operator==(const MoveWord&, const MoveWord&) = default;
};

std::string to_string(const EdgeWord& w);
std::string to_string(const MoveWord& w);
EdgeWord edge_word_from_string(std::string_view s, Topology topology);
MoveWord move_word_from_string(std::string_view s, Topology topology);

/// Pattern slots match joint (move, edge) symbols. Positions beyond the ends
/// of a line read as a cut over a Boundary edge.
enum class EdgeClass : std::uint8_t { Same, Differ, Boundary };

struct PatternSlot {
  std::uint8_t moves;  // bit per MoveSymbol
  std::uint8_t edges;  // bit per EdgeClass

  bool matches(MoveSymbol m, EdgeClass e) const noexcept {
    return (moves >> static_cast<unsigned>(m) & 1U) != 0 &&
           (edges >> static_cast<unsigned>(e) & 1U) != 0;
  }
};

struct ForbiddenPattern {
  std::string name;
  std::vector<PatternSlot> slots;
};

class ForbiddenPatternSet {
 public:
  explicit ForbiddenPatternSet(std::vector<ForbiddenPattern> patterns);

  /// The rule set of solitaire Clobber.
  static const ForbiddenPatternSet& standard();

  std::span<const ForbiddenPattern> patterns() const noexcept { return patterns_; }
  std::size_t max_length() const noexcept { return max_length_; }

  /// Name of a pattern occurring as a suffix of the window, or empty.
  std::string_view match_suffix(std::span<const MoveSymbol> moves,
                                std::span<const EdgeClass> edges) const;

 private:
  std::vector<ForbiddenPattern> patterns_;
  std::size_t max_length_ = 0;
};

/// Operation counts of one evaluation, for the linear-work checks.
struct WorkCounter {
  std::uint64_t symbols = 0;
  std::uint64_t transitions = 0;
};

/// Requires a fully occupied board; throws Error(HolesPresent) otherwise.
EdgeWord encode(const Conformation& c);

/// Direct factor-by-factor check, independent of the compiled automaton.
/// Returns the name of the first violated rule, or empty when feasible.
std::string feasibility_violation(const MoveWord& moves, const EdgeWord& edges);
bool is_feasible(const MoveWord& moves, const EdgeWord& edges);

/// Block count of a move word: cuts + 1 on a line, cuts on a cycle.
std::size_t value_of(const MoveWord& moves);

/// Minimum of value_of over feasible move words, in time linear in |w|.
std::size_t value_from_word(const EdgeWord& w, WorkCounter* counter = nullptr);

struct WordSolution {
  std::size_t value = 0;
  MoveWord moves;
};

/// As value_from_word, also returning a minimising move word (back-pointer walk).
WordSolution optimize_word(const EdgeWord& w, WorkCounter* counter = nullptr);

/// Turns a feasible move word into a move sequence on `c`. Each block plays its
/// rightward run and its leftward run, ordered so the first arrival at the
/// meeting cell clobbers a pawn of the other color.
Strategy realize(const Conformation& c, const MoveWord& moves);

namespace detail {

/// The pattern set compiled into a minimised automaton. A state summarises the
/// last (max_length - 1) move symbols; windows index the last max_length edge
/// classes in base 3, oldest first.
struct PatternAutomaton {
  static constexpr std::size_t kContext = 3;
  static constexpr std::size_t kWindows = 81;

  std::size_t states = 0;
  std::size_t start = 0;
  std::vector<std::array<std::uint8_t, 3>> next;
  std::vector<std::uint8_t> allowed;  // [state][symbol][window]

  bool permits(std::size_t state, MoveSymbol m, std::size_t window) const noexcept {
    return allowed[(state * 3 + static_cast<std::size_t>(m)) * kWindows + window] != 0;
  }

  static PatternAutomaton compile(const ForbiddenPatternSet& set);
  static const PatternAutomaton& standard();
};

}  // namespace detail

}  // namespace clobber
