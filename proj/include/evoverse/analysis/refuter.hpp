#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "evoverse/analysis/path.hpp"
#include "evoverse/analysis/polynomial.hpp"
#include "evoverse/sim/evolutionary_uc.hpp"
#include "evoverse/uc/executor.hpp"

// Adversary against a claimed fast decider M' for
//   L' = {x : some y with |y| = |x| is accepted by M = M_scan}
// on an evolutionary world. The adversary picks a challenge w longer than
// anything accepted so far, studies M' on w in a branch, then uses real
// queries to M to steer the world so that M''s live answer on w is wrong.
namespace evoverse::analysis {

enum class Contradiction {
  // M' accepted w, then every length-|w| string was made permanently rejected.
  AcceptedButEmptied,
  // M' rejected w, yet some z with |z| = |w| is accepted by M.
  RejectedButWitnessed,
  // M' did not finish within f(|w|) steps, so it is not a decider of that speed.
  BudgetExhausted,
};

std::string_view to_string(Contradiction c);
Contradiction contradiction_from_string(std::string_view s);

struct TranscriptEntry {
  std::string phase;  // pre-flood | decide | flood | verify | witness
  std::string actor;  // "M" (M_scan) or "M'" (the decider)
  std::string input;
  uc::Outcome outcome = uc::Outcome::Rejected;

  bool operator==(const TranscriptEntry&) const = default;
};

struct Certificate {
  std::string challenge;
  std::uint64_t budget = 0;
  std::string budget_function;
  std::uint64_t threshold = 0;
  std::uint64_t k = 0;
  std::uint64_t m1 = 0;
  std::uint64_t m = 0;
  uc::Procedure decider;
  std::string before;  // world snapshot when the adversary started
  std::string after;   // world snapshot when it finished
  nlohmann::json analysis;
  std::vector<TranscriptEntry> transcript;
  uc::Outcome decider_outcome = uc::Outcome::Rejected;
  bool challenge_in_l_prime = false;
  Contradiction kind = Contradiction::BudgetExhausted;
};

struct RefuterOptions {
  Polynomial f = Polynomial::parse("n^2");
  // Defaults to f's computed sub-exponential threshold. A smaller value than
  // the computed one is refused.
  std::optional<std::uint64_t> threshold;
  std::uint64_t k = 2;
  // Defaults to 0^L with L = max(m + 1, t + 1).
  std::optional<std::string> challenge;
};

class RefutationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Runs the adversary on the live world (which it evolves) and returns the
// certificate. Throws RefutationError on unusable options or if no
// contradiction could be exhibited.
Certificate refute_fast_decider(sim::EvolutionaryUC& world, const uc::Procedure& decider,
                                const RefuterOptions& options = {});

struct ReplayReport {
  bool verified = false;
  std::vector<std::string> failures;
};

// Restores the "before" world, re-derives every recorded number, re-runs the
// transcript entry by entry and compares the final world byte for byte.
ReplayReport replay_certificate(const Certificate& cert);

nlohmann::json to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace evoverse::analysis
