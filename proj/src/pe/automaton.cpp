#include "evoverse/pe/automaton.hpp"

#include <algorithm>

namespace evoverse::pe {

std::string_view to_string(Verdict v) { return v == Verdict::Accept ? "accept" : "reject"; }

std::string_view to_string(EvolveCase c) {
  switch (c) {
    case EvolveCase::Accepted:
      return "case1";
    case EvolveCase::FrontierReject:
      return "case2-reject";
    case EvolveCase::FrontierPromote:
      return "case2-evolve";
    case EvolveCase::CrashExtend:
      return "case3";
  }
  return "case1";
}

Verdict verdict_from_string(std::string_view s) {
  if (s == "accept") return Verdict::Accept;
  if (s == "reject") return Verdict::Reject;
  throw std::invalid_argument("unknown verdict '" + std::string(s) + "'");
}

EvolveCase evolve_case_from_string(std::string_view s) {
  for (auto c : {EvolveCase::Accepted, EvolveCase::FrontierReject, EvolveCase::FrontierPromote,
                 EvolveCase::CrashExtend}) {
    if (to_string(c) == s) return c;
  }
  throw std::invalid_argument("unknown evolution case '" + std::string(s) + "'");
}

void require_bits(std::string_view x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != '0' && x[i] != '1') {
      throw MalformedInput("symbol '" + std::string(1, x[i]) + "' at position " +
                           std::to_string(i) + " is not in {0,1}");
    }
  }
}

QueryOutcome Pt1Rule::plan(const PEAutomaton& machine, std::string_view x) const {
  QueryOutcome out;
  const auto walk = machine.walk(x);

  if (!walk.crashed) {
    if (machine.accepting().contains(walk.at)) {
      out.verdict = Verdict::Accept;
      out.record.case_taken = EvolveCase::Accepted;
    } else if (machine.can_reach_accepting_in_one_step(walk.at)) {
      out.verdict = Verdict::Reject;
      out.record.case_taken = EvolveCase::FrontierReject;
    } else {
      // Every later replay of x ends at the promoted state, so accepting now
      // is the only verdict that stays persistent.
      out.verdict = Verdict::Accept;
      out.record.case_taken = EvolveCase::FrontierPromote;
      out.record.added_accepting.push_back(walk.at);
    }
    return out;
  }

  // Crash before reading x[consumed]: chain fresh states through the unread
  // suffix and accept at its end.
  out.verdict = Verdict::Accept;
  out.record.case_taken = EvolveCase::CrashExtend;
  StateId prev = walk.at;
  StateId fresh = machine.next_fresh_id();
  for (std::size_t i = walk.consumed; i < x.size(); ++i) {
    out.record.added_states.push_back(fresh);
    out.record.added_transitions.push_back({prev, x[i] - '0', fresh});
    prev = fresh++;
  }
  out.record.added_accepting.push_back(prev);
  return out;
}

const EvolutionRule& pt1_rule() {
  static const Pt1Rule rule;
  return rule;
}

PEAutomaton::PEAutomaton() { states_.insert(start_); }

PEAutomaton::Walk PEAutomaton::walk(std::string_view x) const {
  Walk w{start_, 0, false};
  for (char c : x) {
    auto n = next(w.at, c - '0');
    if (!n) {
      w.crashed = true;
      return w;
    }
    w.at = *n;
    ++w.consumed;
  }
  return w;
}

std::optional<StateId> PEAutomaton::next(StateId s, int bit) const {
  if (auto it = delta_.find({s, bit}); it != delta_.end()) return it->second;
  return std::nullopt;
}

bool PEAutomaton::can_reach_accepting_in_one_step(StateId s) const {
  for (int bit : {0, 1}) {
    if (auto n = next(s, bit); n && accepting_.contains(*n)) return true;
  }
  return false;
}

QueryOutcome PEAutomaton::query(std::string_view x, const EvolutionRule& rule) {
  require_bits(x);
  auto out = rule.plan(*this, x);
  apply(out.record);
  return out;
}

Verdict PEAutomaton::peek(std::string_view x) const {
  require_bits(x);
  return pt1_rule().plan(*this, x).verdict;
}

void PEAutomaton::apply(const EvolutionRecord& record) {
  for (StateId s : record.added_states) {
    states_.insert(s);
    next_id_ = std::max(next_id_, s + 1);
  }
  for (const auto& t : record.added_transitions) {
    auto [it, inserted] = delta_.try_emplace({t.from, t.bit}, t.to);
    if (!inserted) throw std::logic_error("evolution would make a (state, bit) pair nondeterministic");
  }
  for (StateId s : record.added_accepting) accepting_.insert(s);
  clock_ += record.clock_delta();
}

std::vector<Transition> PEAutomaton::transition_list() const {
  std::vector<Transition> out;
  out.reserve(delta_.size());
  for (const auto& [key, to] : delta_) out.push_back({key.first, key.second, to});
  return out;
}

bool PEAutomaton::operator==(const PEAutomaton& other) const {
  return states_ == other.states_ && start_ == other.start_ && delta_ == other.delta_ &&
         accepting_ == other.accepting_ && clock_ == other.clock_;
}

std::size_t max_accepted_length(const std::vector<HistoryEntry>& history) {
  std::size_t best = 0;
  for (const auto& h : history) {
    if (h.verdict == Verdict::Accept) best = std::max(best, h.input.size());
  }
  return best;
}

std::size_t max_accepting_depth(const PEAutomaton& m) {
  std::size_t best = 0;
  std::vector<std::pair<StateId, std::size_t>> frontier{{m.start(), 0}};
  std::set<StateId> seen{m.start()};
  while (!frontier.empty()) {
    auto [s, depth] = frontier.back();
    frontier.pop_back();
    if (m.accepting().contains(s)) best = std::max(best, depth);
    for (int bit : {0, 1}) {
      if (auto n = m.next(s, bit); n && seen.insert(*n).second) frontier.push_back({*n, depth + 1});
    }
  }
  return best;
}

}  // namespace evoverse::pe
