#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "clobber/board.hpp"

namespace clobber::testing {

/// Every fully occupied board text of length n, in lexicographic order.
inline std::vector<std::string> all_colorings(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::string s(n, 'o');
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> (n - 1 - i) & 1U) s[i] = 'x';
    out.push_back(std::move(s));
  }
  return out;
}

/// Random board text; each cell is empty with probability hole_rate.
inline std::string random_text(std::mt19937_64& rng, std::size_t n, double hole_rate = 0.0) {
  std::bernoulli_distribution hole(hole_rate);
  std::string s(n, 'o');
  for (auto& ch : s) {
    if (hole_rate > 0.0 && hole(rng)) ch = '-';
    else ch = (rng() & 1U) ? 'x' : 'o';
  }
  return s;
}

inline Topology random_topology(std::mt19937_64& rng, std::size_t n) {
  return n >= 3 && (rng() & 1U) ? Topology::Cycle : Topology::Line;
}

}  // namespace clobber::testing
