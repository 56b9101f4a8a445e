#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "evoverse/analysis/realize.hpp"
#include "evoverse/uc/procedure.hpp"
#include "evoverse/uc/universe.hpp"

// Black-box query sessions for the distinguisher game. Each session hides a
// coin-flip choice of static or evolutionary backend; nothing returned
// before the guess depends on which one it is.
namespace evoverse::service {

enum class ErrorCode { UnknownSession, MalformedInput, BadPhase, BadRequest };

std::string_view to_string(ErrorCode c);

class ServiceError : public std::runtime_error {
 public:
  ServiceError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }
  int http_status() const;
  nlohmann::json body() const;

 private:
  ErrorCode code_;
};

// Backend a seed picks: the low bit of the first mt19937_64 draw.
std::string_view backend_for_seed(std::uint64_t seed);

inline constexpr std::size_t kMaxInputLength = 4096;

class SessionManager {
 public:
  // Unseeded sessions and ids draw from an RNG seeded with id_seed, or from
  // std::random_device when it is empty. Every query runs procedure (M_scan
  // unless given) with budget budget_per_symbol * |x| + budget_constant.
  explicit SessionManager(std::optional<std::uint64_t> id_seed = std::nullopt);
  SessionManager(std::optional<std::uint64_t> id_seed, uc::Procedure procedure,
                 std::size_t budget_per_symbol = 1, std::size_t budget_constant = 1);

  nlohmann::json create(std::optional<std::uint64_t> seed = std::nullopt);
  nlohmann::json query(const std::string& id, const std::string& input);
  nlohmann::json guess(const std::string& id, const std::string& claim);
  nlohmann::json log(const std::string& id) const;

  std::size_t size() const;

 private:
  struct Session {
    std::string id;
    std::unique_ptr<uc::UniverseComputer> backend;
    analysis::TraceSet transcript;
    bool revealed = false;
    std::string claim;
    mutable std::mutex mutex;
  };

  std::shared_ptr<Session> find(const std::string& id) const;
  nlohmann::json transcript_json(const Session& s) const;

  uc::Procedure procedure_;
  std::size_t budget_per_symbol_;
  std::size_t budget_constant_;
  mutable std::mutex mutex_;
  std::mt19937_64 rng_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
};

}  // namespace evoverse::service
