#pragma once

#include "zeck/service.hpp"

#include <memory>
#include <string>

namespace zeck {

// JSON-over-HTTP front end for GameService:
//   POST /games, GET /games/{id}, POST /games/{id}/moves,
//   GET /games/{id}/analysis?budget=B, GET /decompose?x=, GET /sequence?upTo=
class HttpServer {
 public:
  explicit HttpServer(GameService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Returns the bound port, or -1. Port 0 picks a free one.
  int bind(const std::string& host, int port);
  // Blocks until stop().
  bool listen_after_bind();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace zeck
