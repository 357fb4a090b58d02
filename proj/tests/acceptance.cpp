// Acceptance run: one PASS/FAIL line per release criterion, exit status 1 if
// any line fails. Seeds are fixed so a failure reproduces.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "clobber/extremal.hpp"
#include "clobber/oracle.hpp"
#include "clobber/solver.hpp"
#include "clobber/word_model.hpp"
#include "support.hpp"

using namespace clobber;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

Outcome oracle_equivalence() {
  Oracle oracle(12);
  std::size_t exhaustive = 0, random = 0;
  for (Topology t : {Topology::Line, Topology::Cycle}) {
    for (std::size_t n = t == Topology::Cycle ? 3 : 1; n <= 10; ++n) {
      for (const auto& text : testing::all_colorings(n)) {
        const auto c = parse(text, t);
        if (solve(c).value != oracle.value(c))
          return {false, "mismatch on " + text + " (" + std::string(to_string(t)) + ")"};
        ++exhaustive;
      }
    }
  }
  std::mt19937_64 rng(101);
  for (Topology t : {Topology::Line, Topology::Cycle}) {
    for (std::size_t n : {11U, 12U}) {
      for (int i = 0; i < 10000; ++i) {
        const auto c = parse(testing::random_text(rng, n), t);
        if (solve(c).value != oracle.value(c))
          return {false, "mismatch on " + render(c) + " (" + std::string(to_string(t)) + ")"};
        ++random;
      }
    }
  }
  return {true, fmt("%zu exhaustive boards (n <= 10), %zu random boards (n = 11, 12)", exhaustive,
                    random)};
}

Outcome strategy_soundness() {
  std::mt19937_64 rng(103);
  std::size_t checked = 0;
  for (int i = 0; i < 10000; ++i) {
    const bool cycle = i % 2 == 1;
    const double holes = (i / 2) % 2 == 1 ? 0.1 : 0.0;
    const std::size_t n = (cycle ? 3 : 1) + rng() % (cycle ? 998 : 1000);
    const auto c = parse(testing::random_text(rng, n, holes), cycle ? Topology::Cycle : Topology::Line);
    const auto r = solve(c);
    try {
      if (replay(c, r.strategy).pawn_count() != r.value)
        return {false, "wrong final count on a board of size " + std::to_string(n)};
    } catch (const Error& e) {
      return {false, std::string("illegal move: ") + e.what()};
    }
    ++checked;
  }
  return {true, fmt("%zu boards, n <= 1000, both topologies, with and without holes", checked)};
}

Outcome linear_time() {
  Outcome o;
  std::ostringstream detail;
  // Per-cell work bound from the automaton alone: each pass makes at most
  // 3 transitions per state per cell, and a cycle makes states + 1 passes.
  const std::size_t states = detail::PatternAutomaton::standard().states;
  const double bound = 3.0 * static_cast<double>(states) * static_cast<double>(states + 1);
  std::mt19937_64 rng(107);

  for (Topology t : {Topology::Line, Topology::Cycle}) {
    double worst = 0;
    for (std::size_t n : {1000U, 10000U, 100000U, 1000000U}) {
      WorkCounter counter;
      solve(parse(testing::random_text(rng, n), t), {false, &counter});
      worst = std::max(worst, static_cast<double>(counter.transitions) / static_cast<double>(n));
    }
    if (worst > bound) o.pass = false;
    detail << to_string(t) << " max count/n " << fmt("%.2f", worst) << "; ";

    // Median of three runs per size.
    double med[2];
    int k = 0;
    for (std::size_t n : {1000000U, 10000000U}) {
      const auto c = parse(testing::random_text(rng, n), t);
      std::vector<double> runs;
      for (int rep = 0; rep < 3; ++rep) {
        const auto t0 = Clock::now();
        const auto r = solve(c);
        runs.push_back(seconds_since(t0));
        if (r.value == 0) o.pass = false;
      }
      std::sort(runs.begin(), runs.end());
      med[k++] = runs[1];
    }
    const double ratio = med[1] / med[0];
    if (med[0] >= 1.0 || med[1] >= 15.0 || ratio < 5.0 || ratio > 20.0) o.pass = false;
    detail << fmt("1e6 %.3fs, 1e7 %.3fs, ratio %.1f; ", med[0], med[1], ratio);
  }
  detail << fmt("count/n bound %.0f", bound);
  o.detail = detail.str();
  return o;
}

Outcome conjecture_refutation() {
  Outcome o;
  std::ostringstream detail;
  // The family's values, checked by the oracle where it is affordable.
  for (std::size_t n = 3; n <= 15; n += 3) {
    const auto m = generate_family(n);
    if (oracle_value(m.conformation) != m.claimed_value || solve(m.conformation).value != m.claimed_value)
      return {false, "family value disagrees with the oracle at n = " + std::to_string(n)};
  }
  for (double c : {kExtremal.conjecture_slack, 0.0, 2.0, 5.0, 10.0}) {
    const std::size_t from = conjecture_crossover(c);
    std::size_t checked = 0;
    for (std::size_t n = from; n <= 200; ++n) {
      if (!family_admissible(n)) continue;
      const auto m = generate_family(n);
      const std::size_t v = solve(m.conformation).value;
      if (v != m.claimed_value || !exceeds_conjecture(n, v, c)) {
        o.pass = false;
        detail << fmt("c=%g fails at n=%zu; ", c, n);
        break;
      }
      ++checked;
    }
    detail << fmt("%sc=%g: crossover %zu, %zu sizes", c == kExtremal.conjecture_slack ? "" : "; ", c, from, checked);
  }
  o.detail = detail.str();
  return o;
}

Outcome upper_bound() {
  const BoundReport report = check_upper_bound(12);
  Outcome o;
  o.pass = !report.any_flagged() && report.rows.size() == 10 && report.rows[0].max_value == 1 &&
           report.rows[1].max_value == 2 &&
           report.max_residual() <= static_cast<long>(kExtremal.upper_slack);
  std::ostringstream detail;
  detail << "max values n=3..12:";
  for (const auto& r : report.rows) detail << ' ' << r.max_value;
  detail << "; max residual " << report.max_residual() << " (allowed " << kExtremal.upper_slack << ")";
  o.detail = detail.str();
  return o;
}

Outcome word_model_contract() {
  std::mt19937_64 rng(109);
  for (std::size_t n = 1; n <= 64; ++n) {
    for (int i = 0; i < 20; ++i) {
      const std::string text = testing::random_text(rng, n);
      if (encode(parse(text)).size() != n - 1)
        return {false, "line encode length wrong at n = " + std::to_string(n)};
      if (n >= 3 && encode(parse(text, Topology::Cycle)).size() != n)
        return {false, "cycle encode length wrong at n = " + std::to_string(n)};
    }
  }
  Oracle oracle(10);
  std::size_t boards = 0;
  for (Topology t : {Topology::Line, Topology::Cycle}) {
    for (std::size_t n = t == Topology::Cycle ? 3 : 1; n <= 10; ++n) {
      for (const auto& text : testing::all_colorings(n)) {
        const auto c = parse(text, t);
        if (value_from_word(encode(c)) != oracle.value(c))
          return {false, "value_from_word disagrees on " + text};
        ++boards;
      }
    }
  }
  return {true, fmt("encode lengths for n <= 64; value_from_word on %zu boards", boards)};
}

Outcome symmetry_suite() {
  std::mt19937_64 rng(113);
  for (int i = 0; i < 10000; ++i) {
    const std::size_t n = 1 + rng() % 200;
    const Topology t = testing::random_topology(rng, n);
    const auto c = parse(testing::random_text(rng, n, i % 2 ? 0.05 : 0.0), t);
    const std::size_t v = solve(c).value;
    bool ok = solve(swap_colors(c)).value == v && solve(reversed(c)).value == v &&
              solve(reversed(swap_colors(c))).value == v;
    if (c.is_cycle()) {
      const std::size_t k = rng() % n;
      ok = ok && solve(rotated(c, k)).value == v && solve(reversed(rotated(c, k))).value == v;
    }
    if (!ok) return {false, "value changes under a symmetry of " + render(c)};
  }
  return {true, "10000 boards, n <= 200: color swap, reversal, rotation, reflection"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"oracle-equivalence", oracle_equivalence},
      {"strategy-soundness", strategy_soundness},
      {"linear-time", linear_time},
      {"conjecture-refutation", conjecture_refutation},
      {"upper-bound", upper_bound},
      {"word-model-contract", word_model_contract},
      {"symmetry", symmetry_suite},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", name, seconds_since(t0), o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
