#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

#include "evoverse/pe/automaton.hpp"

namespace evoverse::pe {

// Raised when snapshot bytes do not describe a valid automaton. `invariant`
// names the first rule that failed, e.g. "transition-endpoint".
class SnapshotError : public std::runtime_error {
 public:
  SnapshotError(std::string invariant, const std::string& detail)
      : std::runtime_error(invariant + ": " + detail), invariant_(std::move(invariant)) {}
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

// Canonical form: sorted keys, sorted arrays, transitions as [from, bit, to].
//   {"accepting":[..],"clock":N,"start":S,"states":[..],"transitions":[[f,b,t],..]}
nlohmann::json to_json(const PEAutomaton& m);
PEAutomaton from_json(const nlohmann::json& j);

// Compact canonical bytes. Two structurally identical machines always
// produce identical bytes.
std::string snapshot(const PEAutomaton& m);
PEAutomaton restore(std::string_view bytes);

// One line of the query log: {"case":..,"clock_delta":..,"input":..,"verdict":..}
nlohmann::json query_log_entry(std::string_view input, const QueryOutcome& outcome);

}  // namespace evoverse::pe
