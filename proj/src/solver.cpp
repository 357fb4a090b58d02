#include "clobber/solver.hpp"

namespace clobber {

namespace {

SolveResult solve_occupied(const Conformation& c, Topology expected, const SolveOptions& options) {
  if (c.topology() != expected)
    throw Error(ErrorCode::WrongTopology, "expected a " + std::string(to_string(expected)) +
                                              " board, got a " + std::string(to_string(c.topology())));
  const EdgeWord edges = encode(c);
  WordSolution word = optimize_word(edges, options.counter);
  SolveResult out;
  out.value = word.value;
  out.strategy = realize(c, word.moves);
  if (options.trace) out.trace = Trace{to_string(edges), to_string(word.moves)};
  return out;
}

}  // namespace

SolveResult solve_line(const Conformation& c, const SolveOptions& options) {
  return solve_occupied(c, Topology::Line, options);
}

SolveResult solve_cycle(const Conformation& c, const SolveOptions& options) {
  return solve_occupied(c, Topology::Cycle, options);
}

SolveResult solve(const Conformation& c, const SolveOptions& options) {
  if (c.fully_occupied())
    return c.is_cycle() ? solve_cycle(c, options) : solve_line(c, options);

  const std::size_t n = c.size();
  const std::size_t edge_count = c.is_cycle() ? n : n - 1;
  SolveResult out;
  if (options.trace) out.trace = Trace{std::string(edge_count, '-'), std::string(edge_count, '-')};

  // Walk the cells once, starting just after a hole on a cycle so that no
  // segment is split by the seam.
  std::size_t start = 0;
  if (c.is_cycle()) {
    while (is_pawn(c[start])) ++start;
    start = (start + 1) % n;
  }
  std::size_t rel = 0;
  while (rel < n) {
    if (!is_pawn(c[(start + rel) % n])) {
      ++rel;
      continue;
    }
    const std::size_t first = rel;
    std::vector<Cell> cells;
    while (rel < n && is_pawn(c[(start + rel) % n])) cells.push_back(c[(start + rel++) % n]);

    const SolveResult part = solve_line(Conformation(std::move(cells)), options);
    const std::size_t origin = (start + first) % n;
    out.value += part.value;
    for (const Move& m : part.strategy) out.strategy.push_back({(origin + m.from) % n, m.dir});
    if (options.trace) {
      for (std::size_t j = 0; j < part.trace->edges.size(); ++j) {
        out.trace->edges[(origin + j) % n] = part.trace->edges[j];
        out.trace->moves[(origin + j) % n] = part.trace->moves[j];
      }
    }
  }
  return out;
}

}  // namespace clobber
