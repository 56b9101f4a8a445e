#include "evoverse/sim/evolutionary_uc.hpp"

#include "evoverse/pe/snapshot.hpp"

namespace evoverse::sim {

uc::Answer EvolutionaryUC::success(const uc::Configuration& c) {
  std::uint64_t ticks = c.length() + 1;
  uc::Answer answer = uc::Answer::No;

  if (uc::is_leading_blank_halt(c)) {
    // (h, [_]) matches both patterns; the static one takes precedence.
    answer = uc::Answer::Yes;
  } else if (uc::is_trailing_blank_halt(c)) {
    if (auto x = uc::halted_input_string(c)) {
      auto outcome = automaton_.query(*x);
      ticks += x->size() + outcome.record.clock_delta();
      answer = outcome.verdict == pe::Verdict::Accept ? uc::Answer::Yes : uc::Answer::No;
      log_.push_back({std::move(*x), std::move(outcome)});
    }
  }
  meter_.charge(uc::Box::Success, c.length(), ticks);
  return answer;
}

std::unique_ptr<uc::UniverseComputer> EvolutionaryUC::branch() const {
  return std::make_unique<EvolutionaryUC>(*this);
}

std::vector<pe::HistoryEntry> EvolutionaryUC::history() const {
  std::vector<pe::HistoryEntry> out;
  out.reserve(log_.size());
  for (const auto& q : log_) out.push_back({q.input, q.outcome.verdict});
  return out;
}

std::string EvolutionaryUC::snapshot() const { return pe::snapshot(automaton_); }

std::string EvolutionaryUC::oracle_log_jsonl() const {
  std::string out;
  for (const auto& q : log_) {
    out += pe::query_log_entry(q.input, q.outcome).dump();
    out += '\n';
  }
  return out;
}

EvolutionaryUC EvolutionaryUC::restore(std::string_view snapshot_bytes) {
  return EvolutionaryUC(pe::restore(snapshot_bytes));
}

}  // namespace evoverse::sim
