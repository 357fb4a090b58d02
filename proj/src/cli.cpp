#include "clobber/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <random>

#include <CLI11.hpp>

#include "clobber/extremal.hpp"
#include "clobber/json_io.hpp"
#include "clobber/oracle.hpp"
#include "clobber/solver.hpp"

namespace clobber::cli {

namespace {

Topology topology_of(bool cycle) { return cycle ? Topology::Cycle : Topology::Line; }

void print_strategy(std::ostream& out, const Strategy& s) {
  out << "strategy: " << s.size() << (s.size() == 1 ? " move\n" : " moves\n");
  for (const Move& m : s) out << to_string(m) << '\n';
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  return f;
}

// Two-colored board with uniformly random cells; the first two cells are
// fixed so that every size has both colors.
Conformation random_board(std::size_t n, Topology topology, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ (n * 0x9E3779B97F4A7C15ULL));
  std::vector<Cell> cells(n);
  for (auto& c : cells) c = (rng() & 1U) ? Cell::Black : Cell::White;
  if (n >= 2) {
    cells[0] = Cell::Black;
    cells[1] = Cell::White;
  }
  return Conformation(std::move(cells), topology);
}

std::vector<std::size_t> bench_sizes(std::size_t lo, std::size_t hi, std::size_t steps) {
  std::vector<std::size_t> sizes;
  if (steps <= 1 || lo == hi) return {lo};
  const double ratio = std::pow(static_cast<double>(hi) / static_cast<double>(lo),
                                1.0 / static_cast<double>(steps - 1));
  for (std::size_t k = 0; k < steps; ++k) {
    auto n = static_cast<std::size_t>(std::llround(static_cast<double>(lo) * std::pow(ratio, k)));
    sizes.push_back(k + 1 == steps ? hi : n);
  }
  return sizes;
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reducibility values and optimal play for solitaire Clobber on lines and cycles",
               "clobber"};
  app.require_subcommand(1);

  std::string board, csv_path, strategy_path;
  bool cycle = false, want_strategy = false, want_trace = false, json = false, both = false;
  std::size_t limit = 0, size = 0, n_min = 0, n_max = 0, steps = 4;
  std::uint64_t seed = 42;

  auto* solve_cmd = app.add_subcommand("solve", "Linear-time value and optimal strategy");
  solve_cmd->add_option("BOARD", board, "cells over x (black), o (white), - (empty)")->required();
  solve_cmd->add_flag("--cycle", cycle, "treat the board as a cycle");
  solve_cmd->add_flag("--strategy", want_strategy, "print an optimal move sequence");
  solve_cmd->add_flag("--trace", want_trace, "print the edge word and the chosen move word");
  solve_cmd->add_flag("--json", json, "one JSON document on stdout");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive search value (small boards)");
  oracle_cmd->add_option("BOARD", board)->required();
  oracle_cmd->add_flag("--cycle", cycle);
  oracle_cmd->add_option("--limit", limit, "maximum board size")->default_val(kDefaultOracleLimit);
  oracle_cmd->add_flag("--strategy", want_strategy);
  oracle_cmd->add_flag("--json", json);

  auto* sweep_cmd = app.add_subcommand("sweep", "Maximum value over all boards of size N");
  sweep_cmd->add_option("N", size)->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--cycle", cycle);
  sweep_cmd->add_flag("--both-colors", both, "skip monochromatic boards");
  sweep_cmd->add_option("--csv", csv_path, "write the result row as CSV");
  sweep_cmd->add_option("--limit", limit)->default_val(kDefaultSweepLimit);
  sweep_cmd->add_flag("--json", json);

  auto* family_cmd = app.add_subcommand("family", "Extremal ring of size N");
  family_cmd->add_option("N", size)->required();
  family_cmd->add_flag("--json", json);

  auto* bound_cmd = app.add_subcommand("bound", "Check max value - floor(n/3) on rings up to NMAX");
  bound_cmd->add_option("NMAX", size)->required();
  bound_cmd->add_option("--csv", csv_path);
  bound_cmd->add_option("--limit", limit)->default_val(kDefaultSweepLimit);
  bound_cmd->add_flag("--json", json);

  auto* bench_cmd = app.add_subcommand("bench", "Time the linear solver on random boards");
  bench_cmd->add_option("NMIN", n_min)->required()->check(CLI::PositiveNumber);
  bench_cmd->add_option("NMAX", n_max)->required()->check(CLI::PositiveNumber);
  bench_cmd->add_option("--steps", steps, "number of sizes, geometrically spaced")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", seed);
  bench_cmd->add_flag("--cycle", cycle);
  bench_cmd->add_flag("--json", json);

  auto* verify_cmd = app.add_subcommand("verify", "Replay a strategy file");
  verify_cmd->add_option("BOARD", board)->required();
  verify_cmd->add_option("STRATEGY_FILE", strategy_path)->required();
  verify_cmd->add_flag("--cycle", cycle);
  verify_cmd->add_flag("--json", json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) {
      const Conformation c = parse(board, topology_of(cycle));
      const SolveResult r = solve(c, SolveOptions{want_trace, nullptr});
      if (json) {
        out << to_json(r, c, want_strategy).dump() << '\n';
        return kExitOk;
      }
      out << "value: " << r.value << '\n';
      if (want_strategy) print_strategy(out, r.strategy);
      if (want_trace) out << "edges: " << r.trace->edges << "\nmoves: " << r.trace->moves << '\n';
      return kExitOk;
    }

    if (oracle_cmd->parsed()) {
      const Conformation c = parse(board, topology_of(cycle));
      Oracle oracle(limit);
      const std::size_t v = oracle.value(c);
      const Strategy s = want_strategy ? oracle.strategy(c) : Strategy{};
      if (json) {
        Json j{{"value", v}};
        if (want_strategy) j["strategy"] = to_json(s);
        j["n"] = c.size();
        j["topology"] = std::string(to_string(c.topology()));
        j["states_visited"] = oracle.stats().states_visited;
        j["memo_hits"] = oracle.stats().memo_hits;
        j["max_depth"] = oracle.stats().max_depth;
        out << j.dump() << '\n';
        return kExitOk;
      }
      out << "value: " << v << '\n';
      if (want_strategy) print_strategy(out, s);
      return kExitOk;
    }

    if (sweep_cmd->parsed()) {
      const SweepResult r = sweep_max(size, topology_of(cycle), both, limit);
      if (!csv_path.empty()) {
        auto f = open_csv(csv_path);
        write_sweep_csv(f, std::span(&r, 1));
      }
      if (json) {
        out << Json{{"n", r.n},
                    {"topology", std::string(to_string(r.topology))},
                    {"both_colors", r.both_colors},
                    {"classes", r.classes},
                    {"max_value", r.max_value},
                    {"argmax", r.argmax}}
                   .dump()
            << '\n';
        return kExitOk;
      }
      out << "n: " << r.n << "  topology: " << to_string(r.topology)
          << "  both colors: " << (r.both_colors ? "yes" : "no") << '\n'
          << "classes: " << r.classes << '\n'
          << "max value: " << r.max_value << '\n'
          << "argmax (" << r.argmax.size() << "):";
      for (const auto& a : r.argmax) out << ' ' << a;
      out << '\n';
      return kExitOk;
    }

    if (family_cmd->parsed()) {
      const FamilyMember f = generate_family(size);
      const std::size_t solved = solve(f.conformation).value;
      const double quarter = static_cast<double>(f.n) / 4.0 + kExtremal.conjecture_slack;
      if (json) {
        out << Json{{"n", f.n},
                    {"board", render(f.conformation)},
                    {"topology", "cycle"},
                    {"claimed_value", f.claimed_value},
                    {"solver_value", solved},
                    {"conjecture_bound", quarter},
                    {"exceeds_conjecture", exceeds_conjecture(f.n, solved)}}
                   .dump()
            << '\n';
        return kExitOk;
      }
      out << "n: " << f.n << '\n'
          << "board: " << render(f.conformation) << " (cycle)\n"
          << "claimed value: " << f.claimed_value << '\n'
          << "solver value: " << solved << '\n'
          << std::fixed << std::setprecision(2) << "n/4 + " << kExtremal.conjecture_slack << ": "
          << quarter << '\n'
          << "exceeds n/4 + " << kExtremal.conjecture_slack << ": "
          << (exceeds_conjecture(f.n, solved) ? "yes" : "no") << '\n';
      return kExitOk;
    }

    if (bound_cmd->parsed()) {
      const BoundReport report = check_upper_bound(size, limit);
      if (!csv_path.empty()) {
        auto f = open_csv(csv_path);
        write_bound_csv(f, report);
      }
      if (json) {
        Json rows = Json::array();
        for (const auto& r : report.rows)
          rows.push_back({{"n", r.n},
                          {"max_value", r.max_value},
                          {"residual", r.residual},
                          {"flagged", r.flagged}});
        out << Json{{"allowed_residual", kExtremal.upper_slack},
                    {"any_flagged", report.any_flagged()},
                    {"rows", rows}}
                   .dump()
            << '\n';
        return kExitOk;
      }
      write_bound_table(out, report);
      return kExitOk;
    }

    if (bench_cmd->parsed()) {
      if (n_max < n_min) throw CLI::ValidationError("NMAX", "must be at least NMIN");
      if (cycle && n_min < 3) throw CLI::ValidationError("NMIN", "a cycle needs at least 3 cells");
      Json rows = Json::array();
      if (!json)
        out << std::setw(12) << "n" << std::setw(14) << "elapsed_ms" << std::setw(12) << "ns/cell"
            << std::setw(16) << "transitions" << std::setw(12) << "trans/cell" << '\n';
      for (std::size_t n : bench_sizes(n_min, n_max, steps)) {
        const Conformation c = random_board(n, topology_of(cycle), seed);
        WorkCounter counter;
        const auto t0 = std::chrono::steady_clock::now();
        const SolveResult r = solve(c, SolveOptions{false, &counter});
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        const double per_cell = static_cast<double>(counter.transitions) / static_cast<double>(n);
        if (json) {
          rows.push_back({{"n", n},
                          {"elapsed_ms", ms},
                          {"transitions", counter.transitions},
                          {"value", r.value}});
          continue;
        }
        out << std::setw(12) << n << std::setw(14) << std::fixed << std::setprecision(2) << ms
            << std::setw(12) << std::setprecision(1) << ms * 1e6 / static_cast<double>(n)
            << std::setw(16) << counter.transitions << std::setw(12) << std::setprecision(2)
            << per_cell << '\n';
      }
      if (json) out << Json{{"topology", cycle ? "cycle" : "line"}, {"seed", seed}, {"rows", rows}}.dump() << '\n';
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      const Conformation c = parse(board, topology_of(cycle));
      std::ifstream f(strategy_path);
      if (!f) throw std::runtime_error("cannot open strategy file " + strategy_path);
      const Strategy s = read_strategy(f);
      try {
        const Conformation end = replay(c, s);
        if (json) {
          out << Json{{"legal", true}, {"moves", s.size()}, {"pawns", end.pawn_count()},
                      {"board", render(end)}}
                     .dump()
              << '\n';
        } else {
          out << "legal: yes\nmoves: " << s.size() << "\npawns: " << end.pawn_count()
              << "\nboard: " << render(end) << '\n';
        }
        return kExitOk;
      } catch (const Error& e) {
        if (json)
          out << Json{{"legal", false}, {"index", *e.index()},
                      {"reason", std::string(reason_code(e.code()))}}
                     .dump()
              << '\n';
        err << "error: " << e.what() << '\n';
        return kExitDomain;
      }
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace clobber::cli
