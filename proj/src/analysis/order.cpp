#include "evoverse/analysis/order.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "evoverse/pe/automaton.hpp"
#include "evoverse/sim/procedures.hpp"

namespace evoverse::analysis {

namespace {

SequenceRun run_sequence(uc::UniverseComputer& world, const uc::Procedure& procedure,
                         const std::vector<std::string>& inputs) {
  SequenceRun out;
  out.inputs = inputs;
  uc::ExperienceSet experience;
  for (const auto& x : inputs) {
    auto path = uc::run(world, procedure, x, sim::procedures::scan_budget(x.size()));
    out.outcomes.push_back(path.outcome);
    try {
      experience.record(procedure, x, path);
    } catch (const uc::WellDefinednessViolation&) {
      out.well_defined = false;
    }
  }
  return out;
}

}  // namespace

OrderReport order_experiment(const std::vector<std::string>& seq_a,
                             const std::vector<std::string>& seq_b,
                             const uc::UniverseComputer& base, std::size_t jobs) {
  return order_experiment(seq_a, seq_b, base, sim::procedures::scan(), jobs);
}

OrderReport order_experiment(const std::vector<std::string>& seq_a,
                             const std::vector<std::string>& seq_b,
                             const uc::UniverseComputer& base, const uc::Procedure& procedure,
                             std::size_t jobs) {
  for (const auto& x : seq_a) pe::require_bits(x);
  for (const auto& x : seq_b) pe::require_bits(x);
  if (!std::is_permutation(seq_a.begin(), seq_a.end(), seq_b.begin(), seq_b.end())) {
    throw NotAPermutation("second sequence is not a permutation of the first");
  }

  OrderReport report;
  report.backend = std::string(base.kind());
  auto world_a = base.branch();
  auto world_b = base.branch();
  if (jobs > 1) {
    auto a = std::async(std::launch::async,
                        [&] { return run_sequence(*world_a, procedure, seq_a); });
    report.second = run_sequence(*world_b, procedure, seq_b);
    report.first = a.get();
  } else {
    report.first = run_sequence(*world_a, procedure, seq_a);
    report.second = run_sequence(*world_b, procedure, seq_b);
  }

  std::map<std::string, uc::Outcome> second_seen;
  for (std::size_t i = 0; i < seq_b.size(); ++i) second_seen.try_emplace(seq_b[i], report.second.outcomes[i]);
  std::map<std::string, bool> reported;
  for (std::size_t i = 0; i < seq_a.size(); ++i) {
    if (!reported.try_emplace(seq_a[i], true).second) continue;
    const auto other = second_seen.at(seq_a[i]);
    if (other != report.first.outcomes[i]) {
      report.divergences.push_back({seq_a[i], report.first.outcomes[i], other});
    }
  }
  return report;
}

namespace {

struct Sweep {
  const std::vector<std::string>& inputs;
  const uc::Procedure& procedure;
  std::vector<uc::Outcome> reference;  // by position in inputs
  std::vector<std::size_t> order;
  std::vector<bool> used;
  SweepReport report;

  uc::Outcome ask(uc::UniverseComputer& world, const std::string& x) {
    ++report.runs;
    return uc::run(world, procedure, x, sim::procedures::scan_budget(x.size())).outcome;
  }

  // world has already answered inputs[order[0..depth)]; agree says whether
  // every answer so far matched the reference.
  void visit(std::unique_ptr<uc::UniverseComputer> world, bool agree) {
    if (order.size() == inputs.size()) {
      ++report.permutations;
      if (!agree) {
        std::vector<std::string> seq;
        for (auto i : order) seq.push_back(inputs[i]);
        report.divergent_orders.push_back(std::move(seq));
      }
      return;
    }
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (!used[i]) next.push_back(i);
    }
    for (std::size_t j = 0; j < next.size(); ++j) {
      const auto i = next[j];
      // the last child inherits this node's world instead of copying it
      auto child = (j + 1 == next.size()) ? std::move(world) : world->branch();
      const bool same = ask(*child, inputs[i]) == reference[i];
      used[i] = true;
      order.push_back(i);
      visit(std::move(child), agree && same);
      order.pop_back();
      used[i] = false;
    }
  }
};

}  // namespace

SweepReport permutation_sweep(const std::vector<std::string>& inputs,
                              const uc::UniverseComputer& base, const uc::Procedure& procedure) {
  for (const auto& x : inputs) pe::require_bits(x);
  Sweep s{inputs, procedure, {}, {}, std::vector<bool>(inputs.size(), false), {}};
  auto first = base.branch();
  // a repeated input is held to the verdict of its first occurrence
  std::map<std::string, uc::Outcome> first_verdict;
  for (const auto& x : inputs) {
    auto o = s.ask(*first, x);
    s.reference.push_back(first_verdict.try_emplace(x, o).first->second);
  }
  s.report.runs = 0;
  s.visit(base.branch(), true);
  return s.report;
}

nlohmann::json to_json(const OrderReport& r) {
  auto run_json = [](const SequenceRun& s) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < s.inputs.size(); ++i) {
      rows.push_back({{"input", s.inputs[i]}, {"outcome", uc::to_string(s.outcomes[i])}});
    }
    return nlohmann::json{{"runs", rows}, {"well_defined", s.well_defined}};
  };
  nlohmann::json div = nlohmann::json::array();
  for (const auto& d : r.divergences) {
    div.push_back({{"input", d.input},
                   {"first", uc::to_string(d.first)},
                   {"second", uc::to_string(d.second)}});
  }
  return {{"backend", r.backend},
          {"first", run_json(r.first)},
          {"second", run_json(r.second)},
          {"divergences", div}};
}

}  // namespace evoverse::analysis
