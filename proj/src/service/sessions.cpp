#include "evoverse/service/sessions.hpp"

#include <cstdio>

#include "evoverse/pe/automaton.hpp"
#include "evoverse/sim/evolutionary_uc.hpp"
#include "evoverse/sim/procedures.hpp"
#include "evoverse/sim/static_uc.hpp"
#include "evoverse/uc/executor.hpp"

namespace evoverse::service {

using nlohmann::json;

std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::UnknownSession:
      return "unknown_session";
    case ErrorCode::MalformedInput:
      return "malformed_input";
    case ErrorCode::BadPhase:
      return "bad_phase";
    case ErrorCode::BadRequest:
      return "bad_request";
  }
  return "bad_request";
}

int ServiceError::http_status() const {
  switch (code_) {
    case ErrorCode::UnknownSession:
      return 404;
    case ErrorCode::BadPhase:
      return 409;
    default:
      return 400;
  }
}

json ServiceError::body() const { return {{"code", to_string(code_)}, {"message", what()}}; }

std::string_view backend_for_seed(std::uint64_t seed) {
  std::mt19937_64 coin(seed);
  return (coin() & 1) ? "evolutionary" : "static";
}

namespace {

std::uint64_t entropy() {
  std::random_device rd;
  return (std::uint64_t{rd()} << 32) ^ rd();
}

std::unique_ptr<uc::UniverseComputer> make_backend(std::string_view kind) {
  if (kind == "evolutionary") return std::make_unique<sim::EvolutionaryUC>();
  return std::make_unique<sim::StaticUC>();
}

}  // namespace

SessionManager::SessionManager(std::optional<std::uint64_t> id_seed)
    : SessionManager(id_seed, sim::procedures::scan()) {}

SessionManager::SessionManager(std::optional<std::uint64_t> id_seed, uc::Procedure procedure,
                               std::size_t budget_per_symbol, std::size_t budget_constant)
    : procedure_(std::move(procedure)),
      budget_per_symbol_(budget_per_symbol),
      budget_constant_(budget_constant),
      rng_(id_seed.value_or(entropy())) {}

json SessionManager::create(std::optional<std::uint64_t> seed) {
  auto s = std::make_shared<Session>();
  std::lock_guard lock(mutex_);
  const std::uint64_t coin_seed = seed.value_or(rng_());
  s->backend = make_backend(backend_for_seed(coin_seed));
  do {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(rng_()));
    s->id = buf;
  } while (sessions_.contains(s->id));
  sessions_.emplace(s->id, s);
  return {{"id", s->id}, {"phase", "querying"}};
}

std::shared_ptr<SessionManager::Session> SessionManager::find(const std::string& id) const {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ServiceError(ErrorCode::UnknownSession, "no session '" + id + "'");
  return it->second;
}

json SessionManager::query(const std::string& id, const std::string& input) {
  auto s = find(id);
  if (input.size() > kMaxInputLength) {
    throw ServiceError(ErrorCode::MalformedInput,
                       "input longer than " + std::to_string(kMaxInputLength) + " symbols");
  }
  try {
    pe::require_bits(input);
  } catch (const pe::MalformedInput& e) {
    throw ServiceError(ErrorCode::MalformedInput, e.what());
  }
  std::lock_guard lock(s->mutex);
  if (s->revealed) throw ServiceError(ErrorCode::BadPhase, "session already revealed");
  const auto budget = budget_per_symbol_ * input.size() + budget_constant_;
  const auto path = uc::run(*s->backend, procedure_, input, budget);
  const std::string answer = path.accepted() ? "YES" : "NO";
  s->transcript.pairs.emplace_back(input, answer);
  return {{"id", id}, {"index", s->transcript.pairs.size() - 1}, {"input", input}, {"answer", answer}};
}

json SessionManager::guess(const std::string& id, const std::string& claim) {
  if (claim != "static" && claim != "evolutionary") {
    throw ServiceError(ErrorCode::BadRequest, "claim must be 'static' or 'evolutionary'");
  }
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  if (s->revealed) throw ServiceError(ErrorCode::BadPhase, "a guess was already made");
  s->revealed = true;
  s->claim = claim;
  const std::string truth(s->backend->kind());
  const auto pair = analysis::realize(s->transcript);
  return {{"id", id},
          {"phase", "revealed"},
          {"claim", claim},
          {"truth", truth},
          {"correct", claim == truth},
          {"transcript", transcript_json(*s)},
          {"realization", analysis::to_json(pair)},
          {"clock_ticks", s->backend->meter().ticks()}};
}

json SessionManager::log(const std::string& id) const {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  json out = {{"id", id},
              {"phase", s->revealed ? "revealed" : "querying"},
              {"transcript", transcript_json(*s)}};
  if (s->revealed) {
    out["claim"] = s->claim;
    out["truth"] = std::string(s->backend->kind());
  }
  return out;
}

json SessionManager::transcript_json(const Session& s) const {
  return analysis::to_json(s.transcript);
}

std::size_t SessionManager::size() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

}  // namespace evoverse::service
