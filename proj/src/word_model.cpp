#include "clobber/word_model.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace clobber {

namespace {

constexpr std::size_t kSymbols = 3;
constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
constexpr MoveSymbol kAllSymbols[] = {MoveSymbol::Cut, MoveSymbol::Right, MoveSymbol::Left};

PatternSlot slot(std::string_view moves, std::string_view edges) {
  PatternSlot s{0, 0};
  for (char ch : moves) {
    if (ch == '.') s.moves |= 1U << static_cast<unsigned>(MoveSymbol::Cut);
    if (ch == '>') s.moves |= 1U << static_cast<unsigned>(MoveSymbol::Right);
    if (ch == '<') s.moves |= 1U << static_cast<unsigned>(MoveSymbol::Left);
  }
  for (char ch : edges) {
    if (ch == 's') s.edges |= 1U << static_cast<unsigned>(EdgeClass::Same);
    if (ch == 'd') s.edges |= 1U << static_cast<unsigned>(EdgeClass::Differ);
    if (ch == '*') s.edges = 0b111;
  }
  return s;
}

EdgeClass edge_class(EdgeSymbol e) {
  return e == EdgeSymbol::Same ? EdgeClass::Same : EdgeClass::Differ;
}

std::vector<ForbiddenPattern> standard_patterns() {
  std::vector<ForbiddenPattern> p;
  // A cell is left at most once.
  p.push_back({"leave-twice", {slot("<", "*"), slot(">", "*")}});
  // The rightward runner starts by clobbering the other color...
  p.push_back({"right-start", {slot(".", "*"), slot(">", "s"), slot(">.", "*")}});
  // ...and keeps clobbering that same color until the meeting cell.
  p.push_back({"right-inner", {slot(">", "*"), slot(">", "d"), slot(">.", "*")}});
  p.push_back({"left-start", {slot("<.", "*"), slot("<", "s"), slot(".", "*")}});
  p.push_back({"left-inner", {slot("<.", "*"), slot("<", "d"), slot("<", "*")}});
  // Two runners meeting in one cell must have different colors. Around "><"
  // the color changes between the two runner origins are counted: one from
  // each run of length >= 2, plus the two edges touching the meeting cell.
  for (char before : {'>', '.'}) {
    for (char left_edge : {'s', 'd'}) {
      for (char right_edge : {'s', 'd'}) {
        for (char after : {'<', '.'}) {
          const int changes = (before == '>') + (left_edge == 'd') + (right_edge == 'd') +
                              (after == '<');
          if (changes % 2 == 1) continue;
          p.push_back({"meeting-parity",
                       {slot(std::string(1, before), "*"),
                        slot(">", std::string(1, left_edge)),
                        slot("<", std::string(1, right_edge)),
                        slot(std::string(1, after), "*")}});
        }
      }
    }
  }
  return p;
}

}  // namespace

char to_char(EdgeSymbol e) { return e == EdgeSymbol::Same ? 's' : 'd'; }

char to_char(MoveSymbol m) {
  switch (m) {
    case MoveSymbol::Right: return '>';
    case MoveSymbol::Left: return '<';
    case MoveSymbol::Cut: break;
  }
  return '.';
}

std::size_t MoveWord::cuts() const noexcept {
  return static_cast<std::size_t>(std::count(symbols.begin(), symbols.end(), MoveSymbol::Cut));
}

std::string to_string(const EdgeWord& w) {
  std::string s;
  s.reserve(w.size());
  for (EdgeSymbol e : w.symbols) s.push_back(to_char(e));
  return s;
}

std::string to_string(const MoveWord& w) {
  std::string s;
  s.reserve(w.size());
  for (MoveSymbol m : w.symbols) s.push_back(to_char(m));
  return s;
}

EdgeWord edge_word_from_string(std::string_view s, Topology topology) {
  EdgeWord w{{}, topology};
  w.symbols.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 's') w.symbols.push_back(EdgeSymbol::Same);
    else if (s[i] == 'd') w.symbols.push_back(EdgeSymbol::Differ);
    else throw Error(ErrorCode::IllegalCharacter, "edge word accepts only 's' and 'd'", i);
  }
  return w;
}

MoveWord move_word_from_string(std::string_view s, Topology topology) {
  MoveWord w{{}, topology};
  w.symbols.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '.') w.symbols.push_back(MoveSymbol::Cut);
    else if (s[i] == '>') w.symbols.push_back(MoveSymbol::Right);
    else if (s[i] == '<') w.symbols.push_back(MoveSymbol::Left);
    else throw Error(ErrorCode::IllegalCharacter, "move word accepts only '.', '>' and '<'", i);
  }
  return w;
}

ForbiddenPatternSet::ForbiddenPatternSet(std::vector<ForbiddenPattern> patterns)
    : patterns_(std::move(patterns)) {
  for (const auto& p : patterns_) max_length_ = std::max(max_length_, p.slots.size());
}

const ForbiddenPatternSet& ForbiddenPatternSet::standard() {
  static const ForbiddenPatternSet set(standard_patterns());
  return set;
}

std::string_view ForbiddenPatternSet::match_suffix(std::span<const MoveSymbol> moves,
                                                   std::span<const EdgeClass> edges) const {
  const std::size_t w = std::min(moves.size(), edges.size());
  for (const auto& p : patterns_) {
    const std::size_t len = p.slots.size();
    if (len > w) continue;
    bool hit = true;
    for (std::size_t j = 0; j < len && hit; ++j)
      hit = p.slots[j].matches(moves[w - len + j], edges[w - len + j]);
    if (hit) return p.name;
  }
  return {};
}

EdgeWord encode(const Conformation& c) {
  if (!c.fully_occupied())
    throw Error(ErrorCode::HolesPresent,
                "board " + render(c) + " has empty cells; split it into occupied segments first");
  const std::size_t n = c.size();
  const std::size_t edges = c.is_cycle() ? n : n - 1;
  EdgeWord w{std::vector<EdgeSymbol>(edges), c.topology()};
  for (std::size_t i = 0; i < edges; ++i)
    w.symbols[i] = c[i] == c[(i + 1) % n] ? EdgeSymbol::Same : EdgeSymbol::Differ;
  return w;
}

std::string feasibility_violation(const MoveWord& moves, const EdgeWord& edges) {
  if (moves.size() != edges.size() || moves.topology != edges.topology) return "shape-mismatch";
  const auto& set = ForbiddenPatternSet::standard();
  const std::size_t pad = set.max_length() - 1;
  const std::size_t n = moves.size();
  std::vector<MoveSymbol> m;
  std::vector<EdgeClass> e;
  if (moves.topology == Topology::Line) {
    m.assign(pad, MoveSymbol::Cut);
    e.assign(pad, EdgeClass::Boundary);
    for (std::size_t i = 0; i < n; ++i) {
      m.push_back(moves.symbols[i]);
      e.push_back(edge_class(edges.symbols[i]));
    }
    m.insert(m.end(), pad, MoveSymbol::Cut);
    e.insert(e.end(), pad, EdgeClass::Boundary);
    for (std::size_t end = 1; end <= m.size(); ++end) {
      const std::size_t from = end > set.max_length() ? end - set.max_length() : 0;
      auto hit = set.match_suffix(std::span(m).subspan(from, end - from),
                                  std::span(e).subspan(from, end - from));
      if (!hit.empty()) return std::string(hit);
    }
    return {};
  }
  if (moves.cuts() == 0) return "cycle-without-cut";
  // Circular factors: every window of max_length ending at each position,
  // read around the cycle (several laps when the cycle is shorter).
  const std::size_t w = set.max_length();
  m.resize(w);
  e.resize(w);
  for (std::size_t end = 0; end < n; ++end) {
    for (std::size_t j = 0; j < w; ++j) {
      const std::size_t idx = (end + n * w - (w - 1 - j)) % n;
      m[j] = moves.symbols[idx];
      e[j] = edge_class(edges.symbols[idx]);
    }
    auto hit = set.match_suffix(m, e);
    if (!hit.empty()) return std::string(hit);
  }
  return {};
}

bool is_feasible(const MoveWord& moves, const EdgeWord& edges) {
  return feasibility_violation(moves, edges).empty();
}

std::size_t value_of(const MoveWord& moves) {
  return moves.topology == Topology::Line ? moves.cuts() + 1 : moves.cuts();
}

namespace detail {

PatternAutomaton PatternAutomaton::compile(const ForbiddenPatternSet& set) {
  if (set.max_length() > kContext + 1)
    throw std::logic_error("pattern set needs a longer automaton context");

  // Raw states are the last three move symbols, oldest first, in base 3.
  constexpr std::size_t kRaw = 27;
  auto successor = [](std::size_t raw, std::size_t sym) { return (raw % 9) * 3 + sym; };
  std::vector<std::uint8_t> raw_allowed(kRaw * kSymbols * kWindows);
  for (std::size_t raw = 0; raw < kRaw; ++raw) {
    for (std::size_t sym = 0; sym < kSymbols; ++sym) {
      for (std::size_t win = 0; win < kWindows; ++win) {
        const MoveSymbol m[4] = {static_cast<MoveSymbol>(raw / 9), static_cast<MoveSymbol>(raw / 3 % 3),
                                 static_cast<MoveSymbol>(raw % 3), static_cast<MoveSymbol>(sym)};
        const EdgeClass e[4] = {static_cast<EdgeClass>(win / 27), static_cast<EdgeClass>(win / 9 % 3),
                                static_cast<EdgeClass>(win / 3 % 3), static_cast<EdgeClass>(win % 3)};
        raw_allowed[(raw * kSymbols + sym) * kWindows + win] = set.match_suffix(m, e).empty() ? 1 : 0;
      }
    }
  }
  auto ever_allowed = [&](std::size_t raw, std::size_t sym) {
    const auto* row = &raw_allowed[(raw * kSymbols + sym) * kWindows];
    return std::any_of(row, row + kWindows, [](std::uint8_t b) { return b != 0; });
  };

  // Reachable raw states, in breadth-first order from the all-cut context.
  std::vector<std::size_t> order{0};
  std::vector<bool> seen(kRaw, false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t sym = 0; sym < kSymbols; ++sym) {
      const std::size_t t = successor(order[i], sym);
      if (ever_allowed(order[i], sym) && !seen[t]) {
        seen[t] = true;
        order.push_back(t);
      }
    }
  }

  // Moore refinement: states are equivalent when they permit the same
  // (symbol, window) pairs and move to equivalent states.
  std::vector<int> cls(kRaw, -1);
  for (std::size_t raw : order) cls[raw] = 0;
  std::size_t classes = 1;
  for (;;) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> refined(kRaw, -1);
    for (std::size_t raw : order) {
      std::vector<int> sig{cls[raw]};
      for (std::size_t sym = 0; sym < kSymbols; ++sym) {
        const auto* row = &raw_allowed[(raw * kSymbols + sym) * kWindows];
        sig.insert(sig.end(), row, row + kWindows);
        sig.push_back(ever_allowed(raw, sym) ? cls[successor(raw, sym)] : -1);
      }
      auto [it, fresh] = ids.emplace(std::move(sig), static_cast<int>(ids.size()));
      refined[raw] = it->second;
    }
    const bool stable = ids.size() == classes;
    classes = ids.size();
    cls = std::move(refined);
    if (stable) break;
  }

  // Renumber classes by first appearance in breadth-first order.
  std::vector<int> renumber(classes, -1);
  std::vector<std::size_t> representative;
  for (std::size_t raw : order) {
    if (renumber[cls[raw]] < 0) {
      renumber[cls[raw]] = static_cast<int>(representative.size());
      representative.push_back(raw);
    }
  }

  PatternAutomaton a;
  a.states = representative.size();
  a.start = 0;
  a.next.resize(a.states);
  a.allowed.resize(a.states * kSymbols * kWindows);
  for (std::size_t s = 0; s < a.states; ++s) {
    const std::size_t raw = representative[s];
    for (std::size_t sym = 0; sym < kSymbols; ++sym) {
      const bool usable = ever_allowed(raw, sym);
      a.next[s][sym] = static_cast<std::uint8_t>(
          usable ? renumber[cls[successor(raw, sym)]] : static_cast<int>(s));
      std::copy_n(&raw_allowed[(raw * kSymbols + sym) * kWindows], kWindows,
                  &a.allowed[(s * kSymbols + sym) * kWindows]);
    }
  }
  return a;
}

const PatternAutomaton& PatternAutomaton::standard() {
  static const PatternAutomaton a = compile(ForbiddenPatternSet::standard());
  return a;
}

}  // namespace detail

namespace {

using detail::PatternAutomaton;

constexpr std::size_t kBoundary = static_cast<std::size_t>(EdgeClass::Boundary);

// Edge class at position k of the word as the automaton scans it: line
// positions outside [0, size) are boundary padding, cycle positions wrap.
struct EdgeSource {
  const EdgeWord& w;

  std::size_t at(std::ptrdiff_t k) const {
    const auto n = static_cast<std::ptrdiff_t>(w.size());
    if (w.topology == Topology::Cycle) {
      const auto idx = static_cast<std::size_t>(((k % n) + n) % n);
      return static_cast<std::size_t>(edge_class(w.symbols[idx]));
    }
    if (k < 0 || k >= n) return kBoundary;
    return static_cast<std::size_t>(edge_class(w.symbols[static_cast<std::size_t>(k)]));
  }
};

// One pass of the min-cuts dynamic programme. `steps` includes the line's
// trailing padding; padded steps only admit cuts, which cost nothing there.
// When `back` is non-null it receives (state << 2 | symbol) per step and state.
std::vector<std::uint32_t> scan(const PatternAutomaton& a, const EdgeSource& src, std::size_t real,
                                std::size_t steps, std::size_t seed,
                                std::vector<std::uint8_t>* back, WorkCounter* counter) {
  const std::size_t states = a.states;
  std::vector<std::uint32_t> cost(states, kInf), next(states);
  cost[seed] = 0;
  std::size_t window = 0;
  for (std::ptrdiff_t k = -3; k < 0; ++k) window = window * 3 + src.at(k);
  if (back) back->assign(steps * states, 0);

  for (std::size_t step = 0; step < steps; ++step) {
    const bool padding = step >= real;
    window = (window * 3 + src.at(static_cast<std::ptrdiff_t>(step))) % PatternAutomaton::kWindows;
    std::fill(next.begin(), next.end(), kInf);
    std::uint8_t* row = back ? back->data() + step * states : nullptr;
    for (std::size_t s = 0; s < states; ++s) {
      if (cost[s] == kInf) continue;
      for (MoveSymbol sym : kAllSymbols) {
        if (padding && sym != MoveSymbol::Cut) break;
        if (counter) ++counter->transitions;
        if (!a.permits(s, sym, window)) continue;
        const std::size_t t = a.next[s][static_cast<std::size_t>(sym)];
        const std::uint32_t v = cost[s] + (sym == MoveSymbol::Cut && !padding ? 1U : 0U);
        if (v < next[t]) {
          next[t] = v;
          if (row) row[t] = static_cast<std::uint8_t>(s << 2 | static_cast<std::size_t>(sym));
        }
      }
    }
    cost.swap(next);
    if (counter) ++counter->symbols;
  }
  return cost;
}

MoveWord walk_back(const std::vector<std::uint8_t>& back, std::size_t states, std::size_t real,
                   std::size_t steps, std::size_t final_state, Topology topology) {
  MoveWord out{std::vector<MoveSymbol>(real, MoveSymbol::Cut), topology};
  std::size_t s = final_state;
  for (std::size_t step = steps; step-- > 0;) {
    const std::uint8_t b = back[step * states + s];
    if (step < real) out.symbols[step] = static_cast<MoveSymbol>(b & 3U);
    s = b >> 2;
  }
  return out;
}

WordSolution solve_word(const EdgeWord& w, WorkCounter* counter, bool track) {
  const auto& a = PatternAutomaton::standard();
  const EdgeSource src{w};
  const std::size_t real = w.size();
  WordSolution out;
  out.moves.topology = w.topology;

  if (w.topology == Topology::Line) {
    const std::size_t steps = real + PatternAutomaton::kContext;
    std::vector<std::uint8_t> back;
    auto cost = scan(a, src, real, steps, a.start, track ? &back : nullptr, counter);
    const auto best = static_cast<std::size_t>(std::min_element(cost.begin(), cost.end()) - cost.begin());
    out.value = cost[best] + 1;
    if (track) out.moves = walk_back(back, a.states, real, steps, best, Topology::Line);
    return out;
  }

  // Cycle. Only a monochromatic ring lacks a 'd' edge; it admits no move and
  // would otherwise allow the cut-free word of a single endless run.
  if (std::none_of(w.symbols.begin(), w.symbols.end(),
                   [](EdgeSymbol e) { return e == EdgeSymbol::Differ; })) {
    out.value = real;
    out.moves.symbols.assign(real, MoveSymbol::Cut);
    return out;
  }
  // The state before position 0 summarises the word's last symbols; try each
  // and keep runs that return to it.
  std::uint32_t best_cost = kInf;
  std::size_t best_seed = 0;
  for (std::size_t seed = 0; seed < a.states; ++seed) {
    auto cost = scan(a, src, real, real, seed, nullptr, counter);
    if (cost[seed] < best_cost) {
      best_cost = cost[seed];
      best_seed = seed;
    }
  }
  out.value = best_cost;
  if (track) {
    std::vector<std::uint8_t> back;
    scan(a, src, real, real, best_seed, &back, counter);
    out.moves = walk_back(back, a.states, real, real, best_seed, Topology::Cycle);
  }
  return out;
}

}  // namespace

std::size_t value_from_word(const EdgeWord& w, WorkCounter* counter) {
  return solve_word(w, counter, false).value;
}

WordSolution optimize_word(const EdgeWord& w, WorkCounter* counter) {
  return solve_word(w, counter, true);
}

Strategy realize(const Conformation& c, const MoveWord& moves) {
  const std::size_t n = c.size();
  Strategy out;
  if (n < 2) return out;
  // Cells are read from `start` onwards; the edge after relative cell i is
  // moves[(start + i) % n] on a cycle and moves[i] on a line.
  std::size_t start = 0;
  if (c.is_cycle()) {
    auto cut = std::find(moves.symbols.begin(), moves.symbols.end(), MoveSymbol::Cut);
    if (cut == moves.symbols.end()) return out;
    start = (static_cast<std::size_t>(cut - moves.symbols.begin()) + 1) % n;
  }
  auto cell = [&](std::size_t rel) { return (start + rel) % n; };
  auto edge = [&](std::size_t rel) { return moves.symbols[cell(rel)]; };

  std::size_t lo = 0;
  for (std::size_t rel = 0; rel < n; ++rel) {
    if (rel + 1 < n && edge(rel) != MoveSymbol::Cut) continue;
    const std::size_t hi = rel;
    std::size_t right_run = 0;
    while (lo + right_run < hi && edge(lo + right_run) == MoveSymbol::Right) ++right_run;
    const std::size_t left_run = hi - lo - right_run;

    auto play_right = [&] {
      for (std::size_t k = 0; k < right_run; ++k) out.push_back({cell(lo + k), Direction::Right});
    };
    auto play_left = [&] {
      for (std::size_t k = 0; k < left_run; ++k) out.push_back({cell(hi - k), Direction::Left});
    };
    const bool left_runner_first =
        right_run > 0 && left_run > 0 && c[cell(lo + right_run)] == c[cell(lo)];
    if (left_runner_first) {
      play_left();
      play_right();
    } else {
      play_right();
      play_left();
    }
    lo = hi + 1;
  }
  return out;
}

}  // namespace clobber
