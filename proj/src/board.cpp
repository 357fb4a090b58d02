#include "clobber/board.hpp"

#include <algorithm>

namespace clobber {

char to_char(Cell c) {
  switch (c) {
    case Cell::Black: return 'x';
    case Cell::White: return 'o';
    case Cell::Empty: break;
  }
  return '-';
}

char to_char(Direction d) { return d == Direction::Left ? 'L' : 'R'; }

std::string_view to_string(Topology t) { return t == Topology::Line ? "line" : "cycle"; }

std::optional<Direction> direction_from_char(char c) {
  if (c == 'L') return Direction::Left;
  if (c == 'R') return Direction::Right;
  return std::nullopt;
}

std::optional<Topology> topology_from_string(std::string_view s) {
  if (s == "line") return Topology::Line;
  if (s == "cycle") return Topology::Cycle;
  return std::nullopt;
}

std::string_view reason_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyBoard: return "empty_board";
    case ErrorCode::IllegalCharacter: return "illegal_character";
    case ErrorCode::CycleTooShort: return "cycle_too_short";
    case ErrorCode::OffBoard: return "off_board";
    case ErrorCode::OriginEmpty: return "origin_empty";
    case ErrorCode::TargetEmpty: return "target_empty";
    case ErrorCode::SameColor: return "same_color";
    case ErrorCode::HolesPresent: return "holes_present";
    case ErrorCode::WrongTopology: return "wrong_topology";
    case ErrorCode::LimitExceeded: return "limit_exceeded";
    case ErrorCode::Inadmissible: return "inadmissible";
  }
  return "unknown";
}

Conformation::Conformation(std::vector<Cell> cells, Topology topology)
    : cells_(std::move(cells)), topology_(topology) {
  if (cells_.empty()) throw Error(ErrorCode::EmptyBoard, "board must have at least one cell");
  if (topology_ == Topology::Cycle && cells_.size() < 3)
    throw Error(ErrorCode::CycleTooShort,
                "a cycle needs at least 3 cells, got " + std::to_string(cells_.size()));
}

std::size_t Conformation::pawn_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(cells_.begin(), cells_.end(), is_pawn));
}

bool Conformation::fully_occupied() const noexcept {
  return std::all_of(cells_.begin(), cells_.end(), is_pawn);
}

bool Conformation::monochromatic() const noexcept {
  const bool black = std::find(cells_.begin(), cells_.end(), Cell::Black) != cells_.end();
  const bool white = std::find(cells_.begin(), cells_.end(), Cell::White) != cells_.end();
  return !(black && white);
}

std::optional<std::size_t> Conformation::neighbor(std::size_t from, Direction dir) const noexcept {
  const std::size_t n = cells_.size();
  if (dir == Direction::Left) {
    if (from > 0) return from - 1;
    return is_cycle() ? std::optional<std::size_t>(n - 1) : std::nullopt;
  }
  if (from + 1 < n) return from + 1;
  return is_cycle() ? std::optional<std::size_t>(0) : std::nullopt;
}

Conformation parse(std::string_view text, Topology topology) {
  if (text.empty()) throw Error(ErrorCode::EmptyBoard, "board text is empty");
  std::vector<Cell> cells;
  cells.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'x': cells.push_back(Cell::Black); break;
      case 'o': cells.push_back(Cell::White); break;
      case '-': cells.push_back(Cell::Empty); break;
      default:
        throw Error(ErrorCode::IllegalCharacter,
                    "illegal character '" + std::string(1, text[i]) + "' at index " +
                        std::to_string(i),
                    i);
    }
  }
  return Conformation(std::move(cells), topology);
}

std::string render(const Conformation& c) {
  std::string out;
  out.reserve(c.size());
  for (Cell cell : c.cells()) out.push_back(to_char(cell));
  return out;
}

namespace {

// Shared by check_move and the in-place replay loop.
std::optional<ErrorCode> move_fault(std::span<const Cell> cells, Topology topology,
                                    const Move& m) {
  const std::size_t n = cells.size();
  if (m.from >= n) return ErrorCode::OffBoard;
  std::size_t target = 0;
  if (m.dir == Direction::Left) {
    if (m.from == 0 && topology == Topology::Line) return ErrorCode::OffBoard;
    target = m.from == 0 ? n - 1 : m.from - 1;
  } else {
    if (m.from + 1 == n && topology == Topology::Line) return ErrorCode::OffBoard;
    target = m.from + 1 == n ? 0 : m.from + 1;
  }
  if (!is_pawn(cells[m.from])) return ErrorCode::OriginEmpty;
  if (!is_pawn(cells[target])) return ErrorCode::TargetEmpty;
  if (cells[target] == cells[m.from]) return ErrorCode::SameColor;
  return std::nullopt;
}

std::string describe(ErrorCode code) {
  switch (code) {
    case ErrorCode::OffBoard: return "move leaves the board";
    case ErrorCode::OriginEmpty: return "origin cell is empty";
    case ErrorCode::TargetEmpty: return "target cell is empty";
    case ErrorCode::SameColor: return "target pawn has the same color";
    default: return std::string(reason_code(code));
  }
}

}  // namespace

std::optional<ErrorCode> check_move(const Conformation& c, const Move& m) {
  return move_fault(c.cells(), c.topology(), m);
}

std::vector<Move> legal_moves(const Conformation& c) {
  std::vector<Move> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (Direction d : {Direction::Left, Direction::Right}) {
      if (!check_move(c, Move{i, d})) out.push_back(Move{i, d});
    }
  }
  return out;
}

bool has_legal_move(const Conformation& c) {
  const std::size_t n = c.size();
  const std::size_t edges = c.is_cycle() ? n : n - 1;
  for (std::size_t e = 0; e < edges; ++e) {
    const Cell a = c[e];
    const Cell b = c[(e + 1) % n];
    if (is_pawn(a) && is_pawn(b) && a != b) return true;
  }
  return false;
}

Conformation apply(const Conformation& c, const Move& m) {
  if (auto fault = check_move(c, m))
    throw Error(*fault, "illegal move " + to_string(m) + ": " + describe(*fault));
  std::vector<Cell> cells(c.cells().begin(), c.cells().end());
  const std::size_t target = *c.neighbor(m.from, m.dir);
  cells[target] = cells[m.from];
  cells[m.from] = Cell::Empty;
  return Conformation(std::move(cells), c.topology());
}

Conformation replay(const Conformation& c, std::span<const Move> s) {
  std::vector<Cell> cells(c.cells().begin(), c.cells().end());
  const std::size_t n = cells.size();
  for (std::size_t k = 0; k < s.size(); ++k) {
    const Move& m = s[k];
    if (auto fault = move_fault(cells, c.topology(), m))
      throw Error(*fault,
                  "move " + std::to_string(k) + " (" + to_string(m) + ") is illegal: " +
                      describe(*fault),
                  k);
    const std::size_t target = m.dir == Direction::Left ? (m.from + n - 1) % n : (m.from + 1) % n;
    cells[target] = cells[m.from];
    cells[m.from] = Cell::Empty;
  }
  return Conformation(std::move(cells), c.topology());
}

Conformation swap_colors(const Conformation& c) {
  std::vector<Cell> cells(c.cells().begin(), c.cells().end());
  for (Cell& cell : cells) cell = opposite(cell);
  return Conformation(std::move(cells), c.topology());
}

Conformation reversed(const Conformation& c) {
  std::vector<Cell> cells(c.cells().rbegin(), c.cells().rend());
  return Conformation(std::move(cells), c.topology());
}

Conformation rotated(const Conformation& c, std::size_t k) {
  const std::size_t n = c.size();
  std::vector<Cell> cells(n);
  for (std::size_t i = 0; i < n; ++i) cells[i] = c[(i + k) % n];
  return Conformation(std::move(cells), c.topology());
}

Move reverse_move(const Move& m, std::size_t n) {
  return Move{n - 1 - m.from, m.dir == Direction::Left ? Direction::Right : Direction::Left};
}

std::string to_string(const Move& m) {
  return std::to_string(m.from) + " " + std::string(1, to_char(m.dir));
}

}  // namespace clobber
