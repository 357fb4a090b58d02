#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "clobber/board.hpp"
#include "clobber/word_model.hpp"

namespace clobber {

/// Board-level rendering of the words behind a solve, one character per edge
/// (n - 1 on a line, n on a cycle). Edges touching an empty cell print '-'.
struct Trace {
  std::string edges;  // 's' / 'd'
  std::string moves;  // '.' / '>' / '<'

  friend bool operator==(const Trace&, const Trace&) = default;
};

struct SolveResult {
  std::size_t value = 0;
  Strategy strategy;
  std::optional<Trace> trace;

  friend bool operator==(const SolveResult&, const SolveResult&) = default;
};

struct SolveOptions {
  bool trace = false;
  WorkCounter* counter = nullptr;
};

/// Fully occupied line. Throws Error(HolesPresent) or Error(WrongTopology).
SolveResult solve_line(const Conformation& c, const SolveOptions& options = {});

/// Fully occupied cycle. Throws Error(HolesPresent) or Error(WrongTopology).
SolveResult solve_cycle(const Conformation& c, const SolveOptions& options = {});

/// Any board. Empty cells split it into occupied segments that are solved as
/// lines; values add up and strategies are concatenated in board order.
SolveResult solve(const Conformation& c, const SolveOptions& options = {});

}  // namespace clobber
