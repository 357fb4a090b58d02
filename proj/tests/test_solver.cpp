#include <doctest.h>

#include "clobber/oracle.hpp"
#include "clobber/solver.hpp"
#include "support.hpp"

using namespace clobber;

namespace {

Conformation ring(const char* text) { return parse(text, Topology::Cycle); }

// Checks the strategy replays legally down to the reported value.
void require_sound(const Conformation& c, const SolveResult& r) {
  const Conformation end = replay(c, r.strategy);
  REQUIRE_MESSAGE(end.pawn_count() == r.value, render(c));
  REQUIRE(r.strategy.size() == c.pawn_count() - r.value);
}

}  // namespace

TEST_SUITE("solver") {
  TEST_CASE("solve_line reference values") {
    CHECK(solve_line(parse("xo")).value == 1);
    CHECK(solve_line(parse("xox")).value == 2);
    const auto r = solve_line(parse("xoxo"));
    CHECK(r.value == 1);
    CHECK(r.strategy.size() == 3);
    require_sound(parse("xoxo"), r);
    const auto mono = solve_line(parse("oooo"));
    CHECK(mono.value == 4);
    CHECK(mono.strategy.empty());
  }

  TEST_CASE("solve_cycle reference values") {
    CHECK(solve_cycle(ring("xox")).value == 1);
    CHECK(solve_cycle(ring("xxoo")).value == 2);
    CHECK(solve_cycle(ring("xoxo")).value == 1);
    CHECK(solve_cycle(ring("xxx")).value == 3);
    CHECK(solve_cycle(ring("xxxo")).value == 1);
    for (const char* text : {"xox", "xxoo", "xoxo", "xxxo", "xxoxxoxxoxxo"})
      require_sound(ring(text), solve_cycle(ring(text)));
  }

  TEST_CASE("hole decomposition") {
    CHECK(solve(parse("xo-xo")).value == 2);
    const auto empty = solve(parse("---"));
    CHECK(empty.value == 0);
    CHECK(empty.strategy.empty());
    CHECK(solve(ring("xo-o")).value == 2);
    CHECK(solve(ring("---")).value == 0);
    // A segment that wraps around the seam: cells 3,0,1 form "xoo" read from 3.
    const auto wrap = ring("oo-x");
    const auto r = solve(wrap);
    CHECK(r.value == 1);
    require_sound(wrap, r);
  }

  TEST_CASE("solve_line and solve_cycle reject what they cannot take") {
    try {
      solve_line(parse("x-o"));
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::HolesPresent);
    }
    try {
      solve_line(ring("xox"));
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::WrongTopology);
    }
    try {
      solve_cycle(parse("xox"));
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::WrongTopology);
    }
  }

  TEST_CASE("matches the oracle on every board up to n = 8, holes included") {
    Oracle oracle;
    for (std::size_t n = 1; n <= 8; ++n) {
      std::size_t total = 1;
      for (std::size_t i = 0; i < n; ++i) total *= 3;
      std::string s(n, '-');
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t v = code;
        for (auto& ch : s) {
          ch = "xo-"[v % 3];
          v /= 3;
        }
        for (Topology t : {Topology::Line, Topology::Cycle}) {
          if (t == Topology::Cycle && n < 3) continue;
          const auto c = parse(s, t);
          const auto r = solve(c);
          REQUIRE_MESSAGE(r.value == oracle.value(c), s << ' ' << to_string(t));
          require_sound(c, r);
        }
      }
    }
  }

  TEST_CASE("strategies replay on large random boards") {
    std::mt19937_64 rng(29);
    for (std::size_t n : {1000U, 10000U, 100000U}) {
      for (double holes : {0.0, 0.05}) {
        for (Topology t : {Topology::Line, Topology::Cycle}) {
          const auto c = parse(testing::random_text(rng, n, holes), t);
          require_sound(c, solve(c));
        }
      }
    }
  }

  TEST_CASE("a cycle is never worse than any of its cut lines") {
    for (std::size_t n = 3; n <= 10; ++n) {
      for (const auto& text : testing::all_colorings(n)) {
        const auto c = parse(text, Topology::Cycle);
        const std::size_t v = solve_cycle(c).value;
        for (std::size_t k = 0; k < n; ++k) {
          const auto r = rotated(c, k);
          const Conformation cut(std::vector<Cell>(r.cells().begin(), r.cells().end()));
          REQUIRE(v <= solve_line(cut).value);
        }
      }
    }
  }

  TEST_CASE("bounds and the monochromatic case") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 5000; ++i) {
      const std::size_t n = 1 + rng() % 30;
      const auto c = parse(testing::random_text(rng, n), testing::random_topology(rng, n));
      const std::size_t v = solve(c).value;
      REQUIRE(v >= 1);
      REQUIRE(v <= n);
      REQUIRE((v == n) == c.monochromatic());
    }
  }

  TEST_CASE("symmetries leave the value unchanged") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 2000; ++i) {
      const std::size_t n = 1 + rng() % 60;
      const Topology t = testing::random_topology(rng, n);
      const auto c = parse(testing::random_text(rng, n, 0.05), t);
      const std::size_t v = solve(c).value;
      CHECK(solve(swap_colors(c)).value == v);
      CHECK(solve(reversed(c)).value == v);
      if (c.is_cycle()) CHECK(solve(rotated(c, rng() % n)).value == v);
    }
  }

  TEST_CASE("deterministic output") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = 3 + rng() % 200;
      const auto c = parse(testing::random_text(rng, n, 0.03), testing::random_topology(rng, n));
      CHECK(solve(c, {true, nullptr}) == solve(c, {true, nullptr}));
    }
  }

  TEST_CASE("trace renders the words behind the answer") {
    const auto r = solve(parse("xoxo"), {true, nullptr});
    REQUIRE(r.trace);
    CHECK(r.trace->edges == "ddd");
    CHECK(r.trace->moves.size() == 3);
    CHECK(r.trace->moves.find('.') == std::string::npos);

    const auto h = solve(parse("xo-xx"), {true, nullptr});
    CHECK(h.trace->edges == "d--s");
    CHECK(h.trace->moves[1] == '-');
    CHECK(h.trace->moves[2] == '-');
    CHECK(h.trace->moves[3] == '.');

    CHECK_FALSE(solve(parse("xoxo")).trace.has_value());
  }

  TEST_CASE("work grows linearly") {
    std::mt19937_64 rng(43);
    for (Topology t : {Topology::Line, Topology::Cycle}) {
      double lo = 1e18, hi = 0;
      for (std::size_t n : {1000U, 10000U, 100000U}) {
        WorkCounter counter;
        solve(parse(testing::random_text(rng, n), t), {false, &counter});
        const double ratio = static_cast<double>(counter.transitions) / static_cast<double>(n);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
      }
      CHECK(hi <= 1.05 * lo);
    }
  }
}
