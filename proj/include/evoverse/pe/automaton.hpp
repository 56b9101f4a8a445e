#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace evoverse::pe {

using StateId = std::uint32_t;

enum class Verdict { Reject, Accept };

// Which branch of the evolution rule handled a query.
enum class EvolveCase {
  Accepted,         // full read, ends in F
  FrontierReject,   // full read, end state reaches F in one symbol
  FrontierPromote,  // full read, end state joins F
  CrashExtend,      // read crashed; a fresh accepting chain is grown
};

std::string_view to_string(Verdict v);
std::string_view to_string(EvolveCase c);
Verdict verdict_from_string(std::string_view s);
EvolveCase evolve_case_from_string(std::string_view s);

struct Transition {
  StateId from = 0;
  int bit = 0;
  StateId to = 0;

  auto operator<=>(const Transition&) const = default;
};

struct EvolutionRecord {
  EvolveCase case_taken = EvolveCase::Accepted;
  std::vector<StateId> added_states;
  std::vector<Transition> added_transitions;
  std::vector<StateId> added_accepting;

  // One tick per structural addition.
  std::uint64_t clock_delta() const {
    return added_states.size() + added_transitions.size() + added_accepting.size();
  }
  bool empty() const { return clock_delta() == 0; }

  bool operator==(const EvolutionRecord&) const = default;
};

struct QueryOutcome {
  Verdict verdict = Verdict::Reject;
  EvolutionRecord record;
};

class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws MalformedInput unless every symbol of x is '0' or '1'.
void require_bits(std::string_view x);

class PEAutomaton;

// Decides the verdict and the structural additions for one query. The
// automaton applies the plan; a rule never mutates the machine itself.
class EvolutionRule {
 public:
  virtual ~EvolutionRule() = default;
  virtual QueryOutcome plan(const PEAutomaton& machine, std::string_view x) const = 0;
};

// The three-case additive rule (PT1).
class Pt1Rule final : public EvolutionRule {
 public:
  QueryOutcome plan(const PEAutomaton& machine, std::string_view x) const override;
};

const EvolutionRule& pt1_rule();

// A partial DFA over {0,1} that grows as it is queried. Starts as
// Q={0}, q0=0, F={}, empty transition map.
class PEAutomaton {
 public:
  struct Walk {
    StateId at = 0;          // state where reading stopped
    std::size_t consumed = 0;  // symbols read before stopping
    bool crashed = false;    // stopped because a transition was missing
  };

  PEAutomaton();

  // Runs the evolution rule on x and applies its additions. Throws
  // MalformedInput for symbols outside {0,1}.
  QueryOutcome query(std::string_view x, const EvolutionRule& rule = pt1_rule());

  Walk walk(std::string_view x) const;

  // Verdict the machine would return right now, without evolving.
  // Equivalent to query() on a copy.
  Verdict peek(std::string_view x) const;

  bool can_reach_accepting_in_one_step(StateId s) const;
  std::optional<StateId> next(StateId s, int bit) const;

  StateId start() const { return start_; }
  const std::set<StateId>& states() const { return states_; }
  const std::map<std::pair<StateId, int>, StateId>& transitions() const { return delta_; }
  const std::set<StateId>& accepting() const { return accepting_; }
  std::uint64_t clock() const { return clock_; }

  // Id the next added state will receive.
  StateId next_fresh_id() const { return next_id_; }

  std::vector<Transition> transition_list() const;

  // Structural equality (states, start, transitions, accepting, clock).
  bool operator==(const PEAutomaton& other) const;

 private:
  friend class SnapshotCodec;
  void apply(const EvolutionRecord& record);

  std::set<StateId> states_;
  StateId start_ = 0;
  std::map<std::pair<StateId, int>, StateId> delta_;
  std::set<StateId> accepting_;
  std::uint64_t clock_ = 0;
  StateId next_id_ = 1;
};

struct HistoryEntry {
  std::string input;
  Verdict verdict = Verdict::Reject;
};

// Longest accepted input in a query history; 0 when nothing was accepted.
std::size_t max_accepted_length(const std::vector<HistoryEntry>& history);

// Depth of the deepest accepting state; 0 when F is empty. Under PT1 every
// state is reached by exactly one string, so this equals
// max_accepted_length() over the machine's complete history.
std::size_t max_accepting_depth(const PEAutomaton& m);

}  // namespace evoverse::pe
