#pragma once

#include <istream>
#include <string>

#include <json.hpp>

#include "clobber/board.hpp"
#include "clobber/solver.hpp"

namespace clobber {

using Json = nlohmann::ordered_json;

/// [from, "L" | "R"]
Json to_json(const Move& m);
Json to_json(const Strategy& s);

/// {"value", "strategy"?, "n", "topology", "trace"?}
Json to_json(const SolveResult& r, const Conformation& c, bool with_strategy = true);

/// Accepts [from, "L"|"R"]. Throws Error(IllegalCharacter) on anything else.
Move move_from_json(const Json& j);

/// Strategy file: one "FROM DIR" per line, '#' starts a comment, blank lines
/// are ignored. Errors carry the 1-based line number in the message and the
/// 0-based line index in Error::index().
Strategy read_strategy(std::istream& in);
std::string write_strategy(const Strategy& s);

}  // namespace clobber
