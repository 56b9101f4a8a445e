#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "evoverse/pe/automaton.hpp"
#include "evoverse/uc/universe.hpp"

namespace evoverse::sim {

struct OracleQuery {
  std::string input;
  pe::QueryOutcome outcome;
};

// The evolutionary universe-computer. TBOX is the static rewrite; the SBOX
// answers (h, [_]x) with YES, hands the input-alphabet content of every
// (h, x[_]) to an embedded evolving automaton, and says NO otherwise.
//
// Clock: a success-box call costs |C| + 1 for the pattern check, |x| for the
// automaton's read, plus one tick per structural addition it makes.
class EvolutionaryUC final : public uc::UniverseComputer {
 public:
  EvolutionaryUC() = default;
  explicit EvolutionaryUC(pe::PEAutomaton automaton) : automaton_(std::move(automaton)) {}

  uc::Answer success(const uc::Configuration& c) override;
  uc::LinearBound clock_bound() const override { return {4, 2}; }
  std::unique_ptr<uc::UniverseComputer> branch() const override;
  std::string_view kind() const override { return "evolutionary"; }
  std::uint64_t evolution_ticks() const override { return automaton_.clock(); }

  // Typed deep copy.
  EvolutionaryUC fork() const { return *this; }

  const pe::PEAutomaton& automaton() const { return automaton_; }
  const std::vector<OracleQuery>& oracle_log() const { return log_; }

  // Query history of the embedded automaton as (input, verdict) pairs.
  std::vector<pe::HistoryEntry> history() const;

  // Canonical automaton bytes.
  std::string snapshot() const;
  // Oracle log as JSONL, one query_log_entry per line.
  std::string oracle_log_jsonl() const;

  // Restores the automaton only; the oracle log starts empty.
  static EvolutionaryUC restore(std::string_view snapshot_bytes);

 private:
  pe::PEAutomaton automaton_;
  std::vector<OracleQuery> log_;
};

}  // namespace evoverse::sim
