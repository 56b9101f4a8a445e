#include "evoverse/uc/turing.hpp"

#include <map>

namespace evoverse::uc {

Procedure compile_tm(const TMDescription& tm) {
  if (tm.start == tm.halt) throw std::invalid_argument("start state cannot be the halt state");

  std::set<int> others;
  for (const auto& r : tm.rules) {
    for (int s : {r.state, r.next}) {
      if (s != tm.start && s != tm.halt) others.insert(s);
    }
  }
  std::map<int, StateId> names{{tm.start, StateId::q(0)}, {tm.halt, StateId::halt()}};
  std::uint32_t next_index = 1;
  for (int s : others) names.emplace(s, StateId::q(next_index++));

  std::map<std::pair<int, Symbol>, const TmRule*> seen;
  std::vector<Instruction> instructions;
  for (const auto& r : tm.rules) {
    auto [it, inserted] = seen.try_emplace({r.state, r.read}, &r);
    if (!inserted) {
      const TmRule& prev = *it->second;
      if (prev.next != r.next || prev.write != r.write || prev.move != r.move) {
        throw NondeterministicMachine("state " + std::to_string(r.state) + " has two rules on '" +
                                      std::string(1, r.read) + "'");
      }
      continue;
    }
    instructions.push_back({names.at(r.state), r.read, names.at(r.next), r.write, r.move});
  }
  return Procedure::validate(instructions, Alphabet(tm.extra_symbols));
}

}  // namespace evoverse::uc
