#include "evoverse/service/http.hpp"

#include <httplib.h>

namespace evoverse::service {

using nlohmann::json;

namespace {

void reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

json parse_body(const httplib::Request& req, bool allow_empty) {
  if (req.body.empty()) {
    if (allow_empty) return json::object();
    throw ServiceError(ErrorCode::BadRequest, "request body must be a JSON object");
  }
  auto body = json::parse(req.body, nullptr, false);
  if (body.is_discarded() || !body.is_object()) {
    throw ServiceError(ErrorCode::BadRequest, "request body must be a JSON object");
  }
  return body;
}

std::string string_field(const json& body, const char* name) {
  auto it = body.find(name);
  if (it == body.end() || !it->is_string()) {
    throw ServiceError(ErrorCode::BadRequest, std::string("field '") + name + "' must be a string");
  }
  return it->get<std::string>();
}

template <class F>
httplib::Server::Handler guarded(F f) {
  return [f](const httplib::Request& req, httplib::Response& res) {
    try {
      f(req, res);
    } catch (const ServiceError& e) {
      reply(res, e.http_status(), e.body());
    } catch (const std::exception& e) {
      reply(res, 500, {{"code", "internal"}, {"message", e.what()}});
    }
  };
}

}  // namespace

void install_routes(httplib::Server& server, SessionManager& sessions) {
  server.Post("/sessions", guarded([&](const httplib::Request& req, httplib::Response& res) {
                auto body = parse_body(req, true);
                std::optional<std::uint64_t> seed;
                if (auto it = body.find("seed"); it != body.end() && !it->is_null()) {
                  if (!it->is_number_unsigned()) {
                    throw ServiceError(ErrorCode::BadRequest, "seed must be a non-negative integer");
                  }
                  seed = it->get<std::uint64_t>();
                }
                reply(res, 201, sessions.create(seed));
              }));
  server.Post(R"(/sessions/([^/]+)/query)",
              guarded([&](const httplib::Request& req, httplib::Response& res) {
                auto body = parse_body(req, false);
                reply(res, 200, sessions.query(req.matches[1], string_field(body, "input")));
              }));
  server.Post(R"(/sessions/([^/]+)/guess)",
              guarded([&](const httplib::Request& req, httplib::Response& res) {
                auto body = parse_body(req, false);
                reply(res, 200, sessions.guess(req.matches[1], string_field(body, "claim")));
              }));
  server.Get(R"(/sessions/([^/]+)/log)",
             guarded([&](const httplib::Request& req, httplib::Response& res) {
               reply(res, 200, sessions.log(req.matches[1]));
             }));
  // the browser client may be served from another origin
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  server.Options(R"(/sessions.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

bool serve(SessionManager& sessions, const std::string& host, int port) {
  httplib::Server server;
  install_routes(server, sessions);
  return server.listen(host, port);
}

}  // namespace evoverse::service
