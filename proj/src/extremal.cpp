#include "clobber/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

namespace clobber {

bool family_admissible(std::size_t n) {
  return n >= kExtremal.min_size && n % kExtremal.period == kExtremal.residue;
}

FamilyMember generate_family(std::size_t n) {
  if (!family_admissible(n))
    throw Error(ErrorCode::Inadmissible,
                "family size must be a multiple of " + std::to_string(kExtremal.period) +
                    " (n = " + std::to_string(kExtremal.residue) + " mod " +
                    std::to_string(kExtremal.period) + ", n >= " +
                    std::to_string(kExtremal.min_size) + "), got " + std::to_string(n));
  std::string text;
  text.reserve(n);
  for (std::size_t i = 0; i < n / kExtremal.period; ++i) text += "xxo";
  return FamilyMember{n, parse(text, Topology::Cycle), n / kExtremal.period};
}

bool exceeds_conjecture(std::size_t n, std::size_t value, double conjecture_slack) {
  return static_cast<double>(value) > static_cast<double>(n) / 4.0 + conjecture_slack;
}

std::size_t conjecture_crossover(double conjecture_slack) {
  // n/3 - family_slack > n/4 + slack  <=>  n > 12 (slack + family_slack)
  const double bound = 12.0 * (conjecture_slack + kExtremal.family_slack);
  auto n = static_cast<std::size_t>(std::max(0.0, std::floor(bound))) + 1;
  while (!family_admissible(n)) ++n;
  return n;
}

bool BoundReport::any_flagged() const noexcept {
  return std::any_of(rows.begin(), rows.end(), [](const BoundRow& r) { return r.flagged; });
}

long BoundReport::max_residual() const noexcept {
  long m = 0;
  for (const auto& r : rows) m = std::max(m, r.residual);
  return m;
}

BoundReport check_upper_bound(std::size_t n_max, std::size_t sweep_limit) {
  BoundReport report;
  for (std::size_t n = 3; n <= n_max; ++n) {
    const SweepResult sweep = sweep_max(n, Topology::Cycle, true, sweep_limit);
    BoundRow row;
    row.n = n;
    row.max_value = sweep.max_value;
    row.residual = static_cast<long>(sweep.max_value) - static_cast<long>(n / 3);
    row.flagged = row.residual > static_cast<long>(kExtremal.upper_slack);
    report.rows.push_back(row);
  }
  return report;
}

void write_bound_csv(std::ostream& out, const BoundReport& report) {
  out << "n,max_value,floor_n_over_3,residual,flagged\n";
  for (const auto& r : report.rows)
    out << r.n << ',' << r.max_value << ',' << r.n / 3 << ',' << r.residual << ','
        << (r.flagged ? 1 : 0) << '\n';
}

void write_bound_table(std::ostream& out, const BoundReport& report) {
  out << std::setw(4) << "n" << std::setw(6) << "max" << std::setw(7) << "n/3" << std::setw(10)
      << "residual" << "  flag\n";
  for (const auto& r : report.rows)
    out << std::setw(4) << r.n << std::setw(6) << r.max_value << std::setw(7) << r.n / 3
        << std::setw(10) << r.residual << "  " << (r.flagged ? "!" : "") << '\n';
  out << "allowed residual: " << kExtremal.upper_slack
      << (report.any_flagged() ? "  (FLAGGED ROWS PRESENT)" : "  (no flags)") << '\n';
}

}  // namespace clobber
