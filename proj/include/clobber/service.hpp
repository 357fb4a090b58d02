#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace httplib {
class Server;
}

namespace clobber::service {

struct Reply {
  int status = 200;
  std::string body;  // JSON
};

// Stateless request handlers. Every body is a JSON object with "board"
// (over x, o, -) and an optional "topology" ("line" by default, or "cycle").
//
//   POST /solve  -> {"value", "strategy", "n", "topology"}
//   POST /apply  +{"from", "dir"} -> {"board", "legal", "pawns"[, "reason"]}
//   POST /hint   -> {"move", "value_now", "value_after", "board_after"}
//
// Malformed input is 400 with {"error", "reason"}; a cycle shorter than three
// cells is 422; /hint on a terminal position is 409. An illegal move is not a
// transport error: /apply answers 200 with legal=false and the rule broken.
Reply handle_solve(std::string_view body);
Reply handle_apply(std::string_view body);
Reply handle_hint(std::string_view body);

struct Options {
  std::string host = "127.0.0.1";
  int port = 8715;
  bool dev_cors = false;
};

class Server {
 public:
  explicit Server(Options options);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds the socket; port 0 picks a free port. Returns the bound port or -1.
  int bind();
  /// Serves until stop(); call after bind().
  bool listen();
  void stop();

 private:
  Options options_;
  std::unique_ptr<httplib::Server> http_;
};

}  // namespace clobber::service
