#include <csignal>
#include <iostream>

#include <CLI11.hpp>

#include "clobber/service.hpp"

namespace {
clobber::service::Server* running = nullptr;
}

int main(int argc, char** argv) {
  clobber::service::Options options;
  CLI::App app{"HTTP/JSON front end for the solitaire Clobber solver", "clobber-service"};
  app.add_option("--host", options.host, "bind address")->capture_default_str();
  app.add_option("--port", options.port, "TCP port, 0 for any free port")->capture_default_str();
  app.add_flag("--dev-cors", options.dev_cors, "send permissive CORS headers for local UI work");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  clobber::service::Server server(options);
  const int port = server.bind();
  if (port < 0) {
    std::cerr << "error: cannot bind " << options.host << ':' << options.port << '\n';
    return 2;
  }
  running = &server;
  std::signal(SIGINT, [](int) { running->stop(); });
  std::signal(SIGTERM, [](int) { running->stop(); });
  std::cout << "listening on http://" << options.host << ':' << port << std::endl;
  return server.listen() ? 0 : 2;
}
