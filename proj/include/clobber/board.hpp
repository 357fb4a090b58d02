#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clobber {

enum class Cell : std::uint8_t { Empty, Black, White };
enum class Topology : std::uint8_t { Line, Cycle };
enum class Direction : std::uint8_t { Left, Right };

constexpr Cell opposite(Cell c) {
  return c == Cell::Black ? Cell::White : c == Cell::White ? Cell::Black : Cell::Empty;
}
constexpr bool is_pawn(Cell c) { return c != Cell::Empty; }

char to_char(Cell c);
char to_char(Direction d);
std::string_view to_string(Topology t);
std::optional<Direction> direction_from_char(char c);
std::optional<Topology> topology_from_string(std::string_view s);

/// Error categories shared by every module. The string form returned by
/// reason_code() is part of the wire format (CLI, service, bindings).
enum class ErrorCode {
  EmptyBoard,
  IllegalCharacter,
  CycleTooShort,
  OffBoard,
  OriginEmpty,
  TargetEmpty,
  SameColor,
  HolesPresent,
  WrongTopology,
  LimitExceeded,
  Inadmissible,
};

std::string_view reason_code(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(what), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  /// Character position for parse errors, move position for replay errors.
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

struct Move {
  std::size_t from = 0;
  Direction dir = Direction::Left;

  friend auto operator<=>(const Move&, const Move&) = default;
};

using Strategy = std::vector<Move>;

/// A board: cells in order plus the adjacency rule. Immutable once built.
class Conformation {
 public:
  /// Throws Error(EmptyBoard) for n = 0 and Error(CycleTooShort) for a cycle with n < 3.
  Conformation(std::vector<Cell> cells, Topology topology = Topology::Line);

  std::size_t size() const noexcept { return cells_.size(); }
  Topology topology() const noexcept { return topology_; }
  bool is_cycle() const noexcept { return topology_ == Topology::Cycle; }
  std::span<const Cell> cells() const noexcept { return cells_; }
  Cell operator[](std::size_t i) const { return cells_[i]; }

  std::size_t pawn_count() const noexcept;
  bool fully_occupied() const noexcept;
  /// True when no two pawns of different colors are present.
  bool monochromatic() const noexcept;

  /// Index reached from `from` in direction `dir`, or nullopt past a line end.
  std::optional<std::size_t> neighbor(std::size_t from, Direction dir) const noexcept;

  friend bool operator==(const Conformation&, const Conformation&) = default;

 private:
  std::vector<Cell> cells_;
  Topology topology_;
};

/// 'x' = Black, 'o' = White, '-' = Empty.
Conformation parse(std::string_view text, Topology topology = Topology::Line);
std::string render(const Conformation& c);

/// Reason the move is illegal in `c`, or nullopt if it is legal.
std::optional<ErrorCode> check_move(const Conformation& c, const Move& m);

/// Legal moves in ascending (from, dir) order, Left before Right.
std::vector<Move> legal_moves(const Conformation& c);
bool has_legal_move(const Conformation& c);

Conformation apply(const Conformation& c, const Move& m);

/// Folds apply over `s`. A failure reports the position of the first illegal
/// move in Error::index() and the rule it broke in Error::code().
Conformation replay(const Conformation& c, std::span<const Move> s);

Conformation swap_colors(const Conformation& c);
Conformation reversed(const Conformation& c);
/// Cell i of the result is cell (i + k) mod n of `c`.
Conformation rotated(const Conformation& c, std::size_t k);

/// Maps a move on `c` to the equivalent move on reversed(c).
Move reverse_move(const Move& m, std::size_t n);

std::string to_string(const Move& m);

}  // namespace clobber
