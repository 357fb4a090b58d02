#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "clobber/board.hpp"
#include "clobber/oracle.hpp"

namespace clobber {

/// Constants of the cyclic extremal family and of the n/3 bound.
///
/// The family is the ring (xxo)^k. Each period "xxo" can be cleared down to
/// one pawn, so n/3 is reachable. That nothing lower is reachable is checked,
/// not proved: by the oracle on small rings and by the linear solver up to
/// n = 200 in the tests.
struct ExtremalConstants {
  std::size_t period = 3;
  std::size_t residue = 0;  // admissible n: n % period == residue
  std::size_t min_size = 3;
  /// claimed_value >= n/3 - family_slack
  double family_slack = 0.0;
  /// Two-colored rings satisfy max value <= floor(n/3) + upper_slack
  /// (exhaustive sweeps up to n = 18 attain residual 1 only at n = 4 and 5).
  std::size_t upper_slack = 1;
  /// Additive constant of the refuted "value <= n/4 + O(1)" claim used by default.
  double conjecture_slack = 1.0;
};

inline constexpr ExtremalConstants kExtremal{};

struct FamilyMember {
  std::size_t n = 0;
  Conformation conformation;
  std::size_t claimed_value = 0;
};

bool family_admissible(std::size_t n);

/// Throws Error(Inadmissible) naming the residue class when n is not admissible.
FamilyMember generate_family(std::size_t n);

/// Smallest admissible n from which the family's guaranteed value
/// n/3 - family_slack strictly exceeds n/4 + conjecture_slack.
std::size_t conjecture_crossover(double conjecture_slack = kExtremal.conjecture_slack);

bool exceeds_conjecture(std::size_t n, std::size_t value,
                        double conjecture_slack = kExtremal.conjecture_slack);

struct BoundRow {
  std::size_t n = 0;
  std::size_t max_value = 0;
  long residual = 0;  // max_value - floor(n/3)
  bool flagged = false;
};

struct BoundReport {
  std::vector<BoundRow> rows;
  bool any_flagged() const noexcept;
  long max_residual() const noexcept;
};

/// Sweeps every two-colored ring with 3 <= n <= n_max and flags rows whose
/// residual exceeds upper_slack.
BoundReport check_upper_bound(std::size_t n_max, std::size_t sweep_limit = kDefaultSweepLimit);

/// Columns: n,max_value,floor_n_over_3,residual,flagged
void write_bound_csv(std::ostream& out, const BoundReport& report);
void write_bound_table(std::ostream& out, const BoundReport& report);

}  // namespace clobber
