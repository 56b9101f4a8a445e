#pragma once

#include <string>

#include "evoverse/service/sessions.hpp"

namespace httplib {
class Server;
}

namespace evoverse::service {

// POST /sessions            {seed?}    -> {id, phase}
// POST /sessions/{id}/query {input}    -> {id, index, input, answer}
// POST /sessions/{id}/guess {claim}    -> reveal payload
// GET  /sessions/{id}/log              -> {id, phase, transcript, ...}
// Errors are {code, message} with 404 / 400 / 409.
void install_routes(httplib::Server& server, SessionManager& sessions);

// Blocks serving on host:port until the server is stopped.
bool serve(SessionManager& sessions, const std::string& host, int port);

}  // namespace evoverse::service
