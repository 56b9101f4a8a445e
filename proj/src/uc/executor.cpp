#include "evoverse/uc/executor.hpp"

#include <algorithm>

#include "evoverse/pe/automaton.hpp"

namespace evoverse::uc {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Accepted:
      return "accepted";
    case Outcome::Rejected:
      return "rejected";
    case Outcome::BudgetExhausted:
      return "budget-exhausted";
    case Outcome::Suspended:
      return "suspended";
  }
  return "suspended";
}

Outcome outcome_from_string(std::string_view s) {
  for (auto o : {Outcome::Accepted, Outcome::Rejected, Outcome::BudgetExhausted,
                 Outcome::Suspended}) {
    if (to_string(o) == s) return o;
  }
  throw std::invalid_argument("unknown outcome '" + std::string(s) + "'");
}

void ExperienceSet::record(const Procedure& m, std::string_view input,
                           const ComputationPath& path) {
  if (path.outcome != Outcome::Accepted && path.outcome != Outcome::Rejected) return;
  Observation obs{path.outcome, path.last().associated_string()};
  auto [it, inserted] = entries_.try_emplace({m.fingerprint(), std::string(input)}, obs);
  if (!inserted && it->second != obs) {
    throw WellDefinednessViolation("input '" + std::string(input) + "' was observed as " +
                                   std::string(to_string(it->second.outcome)) + " and now as " +
                                   std::string(to_string(obs.outcome)));
  }
}

std::optional<Observation> ExperienceSet::lookup(const Procedure& m,
                                                 std::string_view input) const {
  if (auto it = entries_.find({m.fingerprint(), std::string(input)}); it != entries_.end()) {
    return it->second;
  }
  return std::nullopt;
}

Run::Run(UniverseComputer& uc, Procedure procedure, std::string_view x, std::size_t budget)
    : uc_(&uc),
      procedure_(std::move(procedure)),
      input_(x),
      budget_(budget) {
  pe::require_bits(x);
  path_.configs.push_back(Configuration::initial(x));
}

namespace {

// One box call on path; shared by Run and the one-shot run().
void advance(UniverseComputer& uc, const Procedure& procedure, std::size_t budget,
             ComputationPath& path) {
  const std::uint64_t ticks_before = uc.meter().ticks();
  const Configuration& current = path.configs.back();
  auto ins = procedure.select(current);
  std::optional<Configuration> next;
  if (ins) {
    if (path.steps() >= budget) {
      path.outcome = Outcome::BudgetExhausted;
    } else {
      next = uc.transition(current, *ins);
    }
  }
  if (next) {
    path.configs.push_back(std::move(*next));
  } else if (path.outcome == Outcome::Suspended) {
    path.outcome = uc.success(current) == Answer::Yes ? Outcome::Accepted : Outcome::Rejected;
  }
  path.clock_cost += uc.meter().ticks() - ticks_before;
}

}  // namespace

bool Run::step() {
  if (finished()) return false;
  advance(*uc_, procedure_, budget_, path_);
  return !finished();
}

void Run::resume(std::size_t max_steps) {
  for (std::size_t i = 0; i < max_steps && step(); ++i) {
  }
}

ComputationPath Run::finish() {
  while (step()) {
  }
  return path_;
}

ComputationPath run(UniverseComputer& uc, const Procedure& m, std::string_view x,
                    std::size_t budget, ExperienceSet* experience) {
  pe::require_bits(x);
  ComputationPath path;
  path.configs.reserve(std::min<std::size_t>(budget, 64) + 1);
  path.configs.push_back(Configuration::initial(x));
  while (path.outcome == Outcome::Suspended) advance(uc, m, budget, path);
  if (experience) experience->record(m, x, path);
  return path;
}

std::optional<std::string> compute_function(UniverseComputer& uc, const Procedure& m,
                                            std::string_view x, std::size_t budget,
                                            ExperienceSet* experience) {
  auto path = run(uc, m, x, budget, experience);
  if (!path.accepted()) return std::nullopt;
  return path.last().associated_string();
}

}  // namespace evoverse::uc
