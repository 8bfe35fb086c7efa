#include "zeck/http_server.hpp"

#include <httplib.h>

namespace zeck {

namespace {

constexpr const char* kJson = "application/json; charset=utf-8";

void send(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

template <typename F>
void guarded(httplib::Response& res, F&& f) {
  try {
    send(res, 200, f());
  } catch (const ServiceError& e) {
    send(res, e.status(), e.to_json());
  } catch (const json::exception& e) {
    send(res, 400, json{{"code", "bad_request"}, {"message", e.what()}});
  } catch (const std::exception& e) {
    send(res, 500, json{{"code", "internal"}, {"message", e.what()}});
  }
}

std::uint64_t query_uint(const httplib::Request& req, const char* key, std::uint64_t fallback) {
  if (!req.has_param(key)) return fallback;
  const std::string v = req.get_param_value(key);
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos || v.size() > 18)
    throw ServiceError(400, "bad_request", std::string("query parameter '") + key + "' must be a non-negative integer");
  return std::stoull(v);
}

}  // namespace

struct HttpServer::Impl {
  explicit Impl(GameService& s) : service(s) {}
  GameService& service;
  httplib::Server server;
};

HttpServer::HttpServer(GameService& service) : impl_(std::make_unique<Impl>(service)) {
  auto& srv = impl_->server;
  GameService& svc = impl_->service;

  srv.Post("/games", [&svc](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return svc.create_game(json::parse(req.body)); });
  });
  srv.Get(R"(/games/([^/]+))", [&svc](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return svc.get_game(req.matches[1]); });
  });
  srv.Post(R"(/games/([^/]+)/moves)", [&svc](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return svc.post_move(req.matches[1], json::parse(req.body)); });
  });
  srv.Get(R"(/games/([^/]+)/analysis)", [&svc](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      std::optional<std::uint64_t> budget;
      if (req.has_param("budget")) budget = query_uint(req, "budget", 0);
      return svc.analysis(req.matches[1], budget);
    });
  });
  srv.Get("/decompose", [&svc](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return svc.decompose(req.get_param_value("x")); });
  });
  srv.Get("/sequence", [&svc](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return svc.sequence(query_uint(req, "upTo", 10)); });
  });
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen_after_bind() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

}  // namespace zeck
