#include <doctest.h>

#include <sstream>

#include "clobber/extremal.hpp"
#include "clobber/solver.hpp"

using namespace clobber;

TEST_SUITE("extremal") {
  TEST_CASE("admissible sizes") {
    CHECK_FALSE(family_admissible(0));
    CHECK(family_admissible(3));
    CHECK_FALSE(family_admissible(4));
    CHECK_FALSE(family_admissible(5));
    CHECK(family_admissible(6));
    CHECK(family_admissible(300));
  }

  TEST_CASE("generate_family builds the ring") {
    const auto m = generate_family(6);
    CHECK(m.n == 6);
    CHECK(render(m.conformation) == "xxoxxo");
    CHECK(m.conformation.is_cycle());
    CHECK(m.claimed_value == 2);
  }

  TEST_CASE("inadmissible sizes name the residue class") {
    for (std::size_t n : {0U, 1U, 2U, 7U, 100U}) {
      try {
        generate_family(n);
        FAIL("no throw");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Inadmissible);
        CHECK(std::string(e.what()).find("0 mod 3") != std::string::npos);
      }
    }
  }

  TEST_CASE("claimed values agree with the oracle on small members") {
    for (std::size_t n = 3; n <= 15; n += 3) {
      const auto m = generate_family(n);
      CHECK_MESSAGE(oracle_value(m.conformation) == m.claimed_value, n);
    }
  }

  TEST_CASE("claimed values agree with the solver up to n = 300") {
    for (std::size_t n = 3; n <= 300; n += 3) {
      const auto m = generate_family(n);
      const auto r = solve(m.conformation);
      REQUIRE_MESSAGE(r.value == m.claimed_value, n);
      CHECK(replay(m.conformation, r.strategy).pawn_count() == m.claimed_value);
      CHECK(static_cast<double>(m.claimed_value) >=
            static_cast<double>(n) / 3.0 - kExtremal.family_slack);
    }
  }

  TEST_CASE("conjecture crossover") {
    CHECK(conjecture_crossover(0.0) == 3);
    CHECK(conjecture_crossover(1.0) == 15);
    CHECK(conjecture_crossover(2.0) == 27);
    CHECK(conjecture_crossover(5.0) == 63);
    CHECK(conjecture_crossover(10.0) == 123);
    CHECK(conjecture_crossover() == 15);
    for (double c : {0.0, 1.0, 2.0, 5.0, 10.0}) {
      const std::size_t from = conjecture_crossover(c);
      for (std::size_t n = from; n <= 400; n += 3)
        CHECK(exceeds_conjecture(n, solve(generate_family(n).conformation).value, c));
      if (from > 3) {
        const std::size_t before = from - 3;
        CHECK_FALSE(exceeds_conjecture(before, before / 3, c));
      }
    }
  }

  TEST_CASE("upper bound report") {
    const auto report = check_upper_bound(10);
    REQUIRE(report.rows.size() == 8);
    CHECK(report.rows[0].n == 3);
    CHECK(report.rows[0].max_value == 1);
    CHECK(report.rows[0].residual == 0);
    CHECK(report.rows[1].n == 4);
    CHECK(report.rows[1].max_value == 2);
    CHECK(report.rows[1].residual == 1);
    const std::size_t expected[] = {1, 2, 2, 2, 2, 2, 3, 3};
    for (std::size_t i = 0; i < report.rows.size(); ++i)
      CHECK(report.rows[i].max_value == expected[i]);
    CHECK_FALSE(report.any_flagged());
    CHECK(report.max_residual() == 1);

    std::ostringstream csv;
    write_bound_csv(csv, report);
    CHECK(csv.str().rfind("n,max_value,floor_n_over_3,residual,flagged\n3,1,1,0,0\n4,2,1,1,0\n", 0) == 0);

    std::ostringstream table;
    write_bound_table(table, report);
    CHECK(table.str().find("no flags") != std::string::npos);
  }
}
