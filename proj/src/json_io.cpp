#include "clobber/json_io.hpp"

#include <sstream>

namespace clobber {

Json to_json(const Move& m) { return Json::array({m.from, std::string(1, to_char(m.dir))}); }

Json to_json(const Strategy& s) {
  Json arr = Json::array();
  for (const Move& m : s) arr.push_back(to_json(m));
  return arr;
}

Json to_json(const SolveResult& r, const Conformation& c, bool with_strategy) {
  Json j;
  j["value"] = r.value;
  if (with_strategy) j["strategy"] = to_json(r.strategy);
  j["n"] = c.size();
  j["topology"] = std::string(to_string(c.topology()));
  if (r.trace) j["trace"] = Json{{"edges", r.trace->edges}, {"moves", r.trace->moves}};
  return j;
}

Move move_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() || !j[1].is_string())
    throw Error(ErrorCode::IllegalCharacter, "a move is [index, \"L\" | \"R\"], got " + j.dump());
  const auto dir_text = j[1].get<std::string>();
  const auto dir = dir_text.size() == 1 ? direction_from_char(dir_text[0]) : std::nullopt;
  if (!dir) throw Error(ErrorCode::IllegalCharacter, "direction must be \"L\" or \"R\"");
  return Move{j[0].get<std::size_t>(), *dir};
}

Strategy read_strategy(std::istream& in) {
  Strategy out;
  std::string line;
  for (std::size_t lineno = 0; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string from, dir, extra;
    if (!(fields >> from)) continue;
    auto fail = [&](const std::string& why) {
      return Error(ErrorCode::IllegalCharacter,
                   "strategy line " + std::to_string(lineno + 1) + ": " + why, lineno);
    };
    if (!(fields >> dir) || (fields >> extra)) throw fail("expected 'FROM DIR'");
    if (from.size() > 18 || from.find_first_not_of("0123456789") != std::string::npos)
      throw fail("FROM must be a non-negative integer");
    if (dir != "L" && dir != "R") throw fail("DIR must be L or R");
    out.push_back(Move{std::stoull(from), dir == "L" ? Direction::Left : Direction::Right});
  }
  return out;
}

std::string write_strategy(const Strategy& s) {
  std::string out;
  for (const Move& m : s) out += to_string(m) + '\n';
  return out;
}

}  // namespace clobber
