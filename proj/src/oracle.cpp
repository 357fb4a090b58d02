#include "clobber/oracle.hpp"

#include <algorithm>
#include <ostream>

namespace clobber {

namespace {

std::uint64_t pack(const Conformation& c) {
  std::uint64_t key = c.size();
  for (Cell cell : c.cells()) key = key << 2 | static_cast<std::uint64_t>(cell);
  return key;
}

void require_size(const Conformation& c, std::size_t limit) {
  if (c.size() > limit)
    throw Error(ErrorCode::LimitExceeded, "board size " + std::to_string(c.size()) +
                                              " exceeds the exhaustive search limit " +
                                              std::to_string(limit));
}

}  // namespace

Oracle::Oracle(std::size_t limit) : limit_(std::min<std::size_t>(limit, 28)) {}

void Oracle::check_limit(const Conformation& c) const { require_size(c, limit_); }

std::size_t Oracle::value(const Conformation& c) {
  check_limit(c);
  return search(c, 0);
}

std::size_t Oracle::search(const Conformation& c, std::uint64_t depth) {
  stats_.max_depth = std::max(stats_.max_depth, depth);
  auto& memo = memo_[c.is_cycle() ? 1 : 0];
  const std::uint64_t key = pack(c);
  if (auto it = memo.find(key); it != memo.end()) {
    ++stats_.memo_hits;
    return it->second;
  }
  ++stats_.states_visited;
  std::size_t best = c.pawn_count();
  for (const Move& m : legal_moves(c)) {
    best = std::min(best, search(apply(c, m), depth + 1));
    if (best == 1) break;  // a non-empty board keeps at least one pawn
  }
  memo.emplace(key, static_cast<std::uint8_t>(best));
  return best;
}

Strategy Oracle::strategy(const Conformation& c) {
  check_limit(c);
  Strategy out;
  Conformation cur = c;
  const std::size_t target = search(c, 0);
  while (cur.pawn_count() > target) {
    for (const Move& m : legal_moves(cur)) {
      Conformation next = apply(cur, m);
      if (search(next, 0) == target) {
        out.push_back(m);
        cur = std::move(next);
        break;
      }
    }
  }
  return out;
}

std::size_t oracle_value(const Conformation& c, std::size_t limit) {
  return Oracle(limit).value(c);
}

Strategy oracle_strategy(const Conformation& c, std::size_t limit) {
  return Oracle(limit).strategy(c);
}

std::size_t exhaustive_value(const Conformation& c, std::size_t limit) {
  require_size(c, limit);
  std::size_t best = c.pawn_count();
  for (const Move& m : legal_moves(c)) best = std::min(best, exhaustive_value(apply(c, m), limit));
  return best;
}

std::string canonical_form(const Conformation& c) {
  std::string best = render(c);
  auto consider = [&](const Conformation& v) {
    const std::size_t shifts = v.is_cycle() ? v.size() : 1;
    for (std::size_t k = 0; k < shifts; ++k) best = std::min(best, render(rotated(v, k)));
  };
  const Conformation swapped = swap_colors(c);
  for (const Conformation* v : {&c, &swapped}) {
    consider(*v);
    consider(reversed(*v));
  }
  return best;
}

SweepResult sweep_max(std::size_t n, Topology topology, bool require_both_colors,
                      std::size_t limit) {
  if (n == 0) throw Error(ErrorCode::EmptyBoard, "sweep size must be positive");
  if (n > limit)
    throw Error(ErrorCode::LimitExceeded, "sweep size " + std::to_string(n) +
                                              " exceeds the sweep limit " + std::to_string(limit));
  if (topology == Topology::Cycle && n < 3)
    throw Error(ErrorCode::CycleTooShort, "a cycle needs at least 3 cells");

  SweepResult out;
  out.n = n;
  out.topology = topology;
  out.both_colors = require_both_colors;
  Oracle oracle(n);
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::string text(n, 'o');
  for (std::uint64_t mask = 0; mask <= all; ++mask) {
    if (require_both_colors && (mask == 0 || mask == all)) continue;
    for (std::size_t i = 0; i < n; ++i) text[i] = (mask >> (n - 1 - i) & 1U) ? 'x' : 'o';
    const Conformation c = parse(text, topology);
    if (canonical_form(c) != text) continue;
    ++out.classes;
    const std::size_t v = oracle.value(c);
    if (v > out.max_value) {
      out.max_value = v;
      out.argmax.clear();
    }
    if (v == out.max_value) out.argmax.push_back(text);
  }
  std::sort(out.argmax.begin(), out.argmax.end());
  return out;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepResult> rows) {
  out << "n,topology,max_value,count_of_argmax,one_argmax_rendered\n";
  for (const auto& r : rows) {
    out << r.n << ',' << to_string(r.topology) << ',' << r.max_value << ',' << r.argmax.size()
        << ',' << (r.argmax.empty() ? "" : r.argmax.front()) << '\n';
  }
}

}  // namespace clobber
