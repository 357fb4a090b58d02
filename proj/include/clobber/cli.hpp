#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace clobber::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics and usage text to `err`.
///
///   solve BOARD [--cycle] [--strategy] [--trace] [--json]
///   oracle BOARD [--cycle] [--limit N] [--strategy] [--json]
///   sweep N [--cycle] [--both-colors] [--csv PATH] [--limit N] [--json]
///   family N [--json]
///   bound NMAX [--csv PATH] [--limit N] [--json]
///   bench NMIN NMAX [--steps K] [--seed S] [--cycle] [--json]
///   verify BOARD STRATEGY_FILE [--cycle] [--json]
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clobber::cli
