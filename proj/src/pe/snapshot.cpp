#include "evoverse/pe/snapshot.hpp"

#include <algorithm>
#include <limits>

namespace evoverse::pe {

using nlohmann::json;

class SnapshotCodec {
 public:
  static PEAutomaton build(std::set<StateId> states, StateId start,
                           std::map<std::pair<StateId, int>, StateId> delta,
                           std::set<StateId> accepting, std::uint64_t clock) {
    PEAutomaton m;
    m.next_id_ = states.empty() ? 0 : *states.rbegin() + 1;
    m.states_ = std::move(states);
    m.start_ = start;
    m.delta_ = std::move(delta);
    m.accepting_ = std::move(accepting);
    m.clock_ = clock;
    return m;
  }
};

namespace {

const json& field(const json& j, const char* name) {
  if (!j.contains(name)) throw SnapshotError("missing-field", std::string("no '") + name + "'");
  return j.at(name);
}

StateId as_state(const json& v, const char* what) {
  if (!v.is_number_unsigned()) {
    throw SnapshotError("state-id", std::string(what) + " must be a non-negative integer");
  }
  auto raw = v.get<std::uint64_t>();
  if (raw > std::numeric_limits<StateId>::max()) {
    throw SnapshotError("state-id", std::string(what) + " out of range");
  }
  return static_cast<StateId>(raw);
}

}  // namespace

json to_json(const PEAutomaton& m) {
  json transitions = json::array();
  for (const auto& t : m.transition_list()) transitions.push_back({t.from, t.bit, t.to});
  return json{{"accepting", std::vector<StateId>(m.accepting().begin(), m.accepting().end())},
              {"clock", m.clock()},
              {"start", m.start()},
              {"states", std::vector<StateId>(m.states().begin(), m.states().end())},
              {"transitions", std::move(transitions)}};
}

PEAutomaton from_json(const json& j) {
  if (!j.is_object()) throw SnapshotError("object", "snapshot must be a JSON object");

  const auto& jstates = field(j, "states");
  if (!jstates.is_array()) throw SnapshotError("states-array", "'states' must be an array");
  std::set<StateId> states;
  for (const auto& s : jstates) {
    if (!states.insert(as_state(s, "state")).second) {
      throw SnapshotError("states-unique", "state " + s.dump() + " listed twice");
    }
  }

  StateId start = as_state(field(j, "start"), "start");
  if (!states.contains(start)) {
    throw SnapshotError("start-in-states", "start " + std::to_string(start) + " is not a state");
  }

  const auto& jdelta = field(j, "transitions");
  if (!jdelta.is_array()) throw SnapshotError("transitions-array", "'transitions' must be an array");
  std::map<std::pair<StateId, int>, StateId> delta;
  for (const auto& t : jdelta) {
    if (!t.is_array() || t.size() != 3) {
      throw SnapshotError("transition-shape", "transition " + t.dump() + " is not [from, bit, to]");
    }
    StateId from = as_state(t[0], "transition source");
    StateId to = as_state(t[2], "transition target");
    if (!t[1].is_number_unsigned() || t[1].get<std::uint64_t>() > 1) {
      throw SnapshotError("transition-bit", "transition " + t.dump() + " has a bit outside {0,1}");
    }
    int bit = t[1].get<int>();
    if (!states.contains(from) || !states.contains(to)) {
      throw SnapshotError("transition-endpoint", "transition " + t.dump() + " leaves the state set");
    }
    if (!delta.try_emplace({from, bit}, to).second) {
      throw SnapshotError("partial-determinism",
                          "two transitions from state " + std::to_string(from) + " on " +
                              std::to_string(bit));
    }
  }

  const auto& jacc = field(j, "accepting");
  if (!jacc.is_array()) throw SnapshotError("accepting-array", "'accepting' must be an array");
  std::set<StateId> accepting;
  for (const auto& s : jacc) {
    StateId id = as_state(s, "accepting state");
    if (!states.contains(id)) {
      throw SnapshotError("accepting-subset", "accepting state " + s.dump() + " is not a state");
    }
    accepting.insert(id);
  }

  const auto& jclock = field(j, "clock");
  if (!jclock.is_number_unsigned()) throw SnapshotError("clock", "'clock' must be a non-negative integer");

  return SnapshotCodec::build(std::move(states), start, std::move(delta), std::move(accepting),
                              jclock.get<std::uint64_t>());
}

std::string snapshot(const PEAutomaton& m) { return to_json(m).dump(); }

PEAutomaton restore(std::string_view bytes) {
  json j = json::parse(bytes, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw SnapshotError("json", "snapshot is not valid JSON");
  return from_json(j);
}

json query_log_entry(std::string_view input, const QueryOutcome& outcome) {
  return json{{"case", to_string(outcome.record.case_taken)},
              {"clock_delta", outcome.record.clock_delta()},
              {"input", input},
              {"verdict", to_string(outcome.verdict)}};
}

}  // namespace evoverse::pe
