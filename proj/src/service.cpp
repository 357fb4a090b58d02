#include "clobber/service.hpp"

#include <httplib.h>

#include <optional>

#include "clobber/json_io.hpp"
#include "clobber/solver.hpp"

namespace clobber::service {

namespace {

Reply error_reply(int status, std::string_view reason, const std::string& message) {
  return Reply{status, Json{{"error", message}, {"reason", std::string(reason)}}.dump()};
}

struct BadRequest {
  int status;
  std::string reason;
  std::string message;
};

struct Position {
  Json body;
  Conformation board;
};

// Parses the common {"board", "topology"} part or throws BadRequest.
Position read_position(std::string_view text) {
  Json body = Json::parse(text, nullptr, false);
  if (body.is_discarded() || !body.is_object())
    throw BadRequest{400, "malformed_json", "request body must be a JSON object"};
  if (!body.contains("board") || !body["board"].is_string())
    throw BadRequest{400, "missing_board", "\"board\" must be a string over x, o, -"};
  Topology topology = Topology::Line;
  if (body.contains("topology")) {
    const auto t = body["topology"].is_string()
                       ? topology_from_string(body["topology"].get<std::string>())
                       : std::nullopt;
    if (!t) throw BadRequest{400, "bad_topology", "\"topology\" must be \"line\" or \"cycle\""};
    topology = *t;
  }
  try {
    Conformation board = parse(body["board"].get<std::string>(), topology);
    return Position{std::move(body), std::move(board)};
  } catch (const Error& e) {
    const int status = e.code() == ErrorCode::CycleTooShort ? 422 : 400;
    throw BadRequest{status, std::string(reason_code(e.code())), e.what()};
  }
}

template <typename Fn>
Reply guarded(std::string_view body, Fn&& fn) {
  try {
    return fn(read_position(body));
  } catch (const BadRequest& bad) {
    return error_reply(bad.status, bad.reason, bad.message);
  }
}

}  // namespace

Reply handle_solve(std::string_view body) {
  return guarded(body, [](const Position& p) {
    return Reply{200, to_json(solve(p.board), p.board).dump()};
  });
}

Reply handle_apply(std::string_view body) {
  return guarded(body, [](const Position& p) {
    const Json& b = p.body;
    if (!b.contains("from") || !b["from"].is_number_unsigned())
      throw BadRequest{400, "bad_from", "\"from\" must be a non-negative integer"};
    if (!b.contains("dir") || !b["dir"].is_string() ||
        (b["dir"] != "L" && b["dir"] != "R"))
      throw BadRequest{400, "bad_dir", "\"dir\" must be \"L\" or \"R\""};
    const Move m{b["from"].get<std::size_t>(),
                 b["dir"] == "L" ? Direction::Left : Direction::Right};
    if (auto fault = check_move(p.board, m)) {
      return Reply{200, Json{{"board", render(p.board)},
                             {"legal", false},
                             {"pawns", p.board.pawn_count()},
                             {"reason", std::string(reason_code(*fault))}}
                            .dump()};
    }
    const Conformation next = apply(p.board, m);
    return Reply{200, Json{{"board", render(next)}, {"legal", true}, {"pawns", next.pawn_count()}}
                          .dump()};
  });
}

Reply handle_hint(std::string_view body) {
  return guarded(body, [](const Position& p) {
    const SolveResult now = solve(p.board);
    if (now.strategy.empty())
      throw BadRequest{409, "terminal", "no legal move in this position"};
    const Move m = now.strategy.front();
    const Conformation next = apply(p.board, m);
    return Reply{200, Json{{"move", to_json(m)},
                           {"value_now", now.value},
                           {"value_after", solve(next).value},
                           {"board_after", render(next)}}
                          .dump()};
  });
}

Server::Server(Options options) : options_(std::move(options)), http_(std::make_unique<httplib::Server>()) {
  const bool cors = options_.dev_cors;
  auto route = [this, cors](const char* path, Reply (*handler)(std::string_view)) {
    http_->Post(path, [handler, cors](const httplib::Request& req, httplib::Response& res) {
      const Reply r = handler(req.body);
      res.status = r.status;
      if (cors) res.set_header("Access-Control-Allow-Origin", "*");
      res.set_content(r.body, "application/json");
    });
  };
  route("/solve", &handle_solve);
  route("/apply", &handle_apply);
  route("/hint", &handle_hint);
  if (cors) {
    http_->Options(R"(/(solve|apply|hint))", [](const httplib::Request&, httplib::Response& res) {
      res.set_header("Access-Control-Allow-Origin", "*");
      res.set_header("Access-Control-Allow-Methods", "POST, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
      res.status = 204;
    });
  }
}

Server::~Server() = default;

int Server::bind() {
  if (options_.port == 0) return http_->bind_to_any_port(options_.host);
  return http_->bind_to_port(options_.host, options_.port) ? options_.port : -1;
}

bool Server::listen() { return http_->listen_after_bind(); }

void Server::stop() { http_->stop(); }

}  // namespace clobber::service
