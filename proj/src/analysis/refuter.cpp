#include "evoverse/analysis/refuter.hpp"

#include <algorithm>

#include "evoverse/analysis/strings.hpp"
#include "evoverse/pe/automaton.hpp"
#include "evoverse/sim/procedures.hpp"

namespace evoverse::analysis {

namespace {

// Keeps a certificate from asking for more steps than a desk machine can run.
constexpr std::uint64_t kMaxBudget = 10'000'000;
constexpr std::size_t kMaxChallenge = 20;

struct Limits {
  std::uint64_t t = 0;
  std::uint64_t m1 = 0;
  std::uint64_t m = 0;
};

Limits limits_for(const sim::EvolutionaryUC& world, const Polynomial& f,
                  std::optional<std::uint64_t> threshold, std::uint64_t k) {
  auto computed = f.subexponential_threshold();
  if (!computed) throw RefutationError("f = " + f.text() + " is not below 2^n for large n");
  Limits l;
  l.t = threshold.value_or(*computed);
  if (l.t < *computed) {
    throw RefutationError("f = " + f.text() + " is not below 2^n beyond t = " + std::to_string(l.t) +
                          " (smallest valid t is " + std::to_string(*computed) + ")");
  }
  l.m1 = pe::max_accepting_depth(world.automaton());
  l.m = std::max(l.m1, k);
  return l;
}

class Transcript {
 public:
  Transcript(sim::EvolutionaryUC& world, Certificate& cert) : world_(world), cert_(cert) {}

  uc::Outcome ask_m(const char* phase, const std::string& v) {
    auto o = uc::run(world_, scan_, v, sim::procedures::scan_budget(v.size())).outcome;
    cert_.transcript.push_back({phase, "M", v, o});
    return o;
  }

  uc::Outcome ask_decider() {
    auto o = uc::run(world_, cert_.decider, cert_.challenge, cert_.budget).outcome;
    cert_.transcript.push_back({"decide", "M'", cert_.challenge, o});
    return o;
  }

 private:
  sim::EvolutionaryUC& world_;
  Certificate& cert_;
  uc::Procedure scan_ = sim::procedures::scan();
};

}  // namespace

std::string_view to_string(Contradiction c) {
  switch (c) {
    case Contradiction::AcceptedButEmptied:
      return "accepted-but-emptied";
    case Contradiction::RejectedButWitnessed:
      return "rejected-but-witnessed";
    case Contradiction::BudgetExhausted:
      return "budget-exhausted";
  }
  return "budget-exhausted";
}

Contradiction contradiction_from_string(std::string_view s) {
  for (auto c : {Contradiction::AcceptedButEmptied, Contradiction::RejectedButWitnessed,
                 Contradiction::BudgetExhausted}) {
    if (to_string(c) == s) return c;
  }
  throw std::invalid_argument("unknown contradiction kind '" + std::string(s) + "'");
}

Certificate refute_fast_decider(sim::EvolutionaryUC& world, const uc::Procedure& decider,
                                const RefuterOptions& options) {
  const auto lim = limits_for(world, options.f, options.threshold, options.k);

  Certificate cert;
  cert.decider = decider;
  cert.budget_function = options.f.text();
  cert.threshold = lim.t;
  cert.k = options.k;
  cert.m1 = lim.m1;
  cert.m = lim.m;
  cert.challenge = options.challenge.value_or(std::string(std::max(lim.m, lim.t) + 1, '0'));
  pe::require_bits(cert.challenge);
  const std::size_t n = cert.challenge.size();
  if (n <= lim.m || n <= lim.t) {
    throw RefutationError("challenge length " + std::to_string(n) + " must exceed m = " +
                          std::to_string(lim.m) + " and t = " + std::to_string(lim.t));
  }
  if (n > kMaxChallenge) {
    throw RefutationError("challenge length " + std::to_string(n) + " is beyond the desk bound " +
                          std::to_string(kMaxChallenge));
  }
  cert.budget = options.f(n);
  if (cert.budget > kMaxBudget) {
    throw RefutationError("budget f(" + std::to_string(n) + ") = " + std::to_string(cert.budget) +
                          " is beyond the desk bound");
  }
  cert.before = world.snapshot();

  const auto analysis = analyze_path(world, decider, cert.challenge, cert.budget);
  cert.analysis = to_json(analysis);

  Transcript log(world, cert);
  if (analysis.path.outcome != uc::Outcome::BudgetExhausted && !analysis.halting_positions.empty()) {
    // Make every string M' will show the oracle at length |w| or |w|+2
    // permanently rejected before M' gets to ask.
    for (const auto& v : analysis.E) log.ask_m("pre-flood", v + "0");
    for (const auto& v : analysis.D) log.ask_m("pre-flood", v + "0");
  }

  cert.decider_outcome = log.ask_decider();
  switch (cert.decider_outcome) {
    case uc::Outcome::Accepted: {
      for (const auto& v : bit_strings(n)) log.ask_m("flood", v + "0");
      for (const auto& v : bit_strings(n)) {
        if (log.ask_m("verify", v) != uc::Outcome::Rejected) {
          throw RefutationError("flooding left " + v + " accepted; no contradiction for " +
                                cert.challenge);
        }
      }
      cert.kind = Contradiction::AcceptedButEmptied;
      cert.challenge_in_l_prime = false;
      break;
    }
    case uc::Outcome::Rejected: {
      std::optional<std::string> z;
      for (const auto& v : bit_strings(n)) {
        if (world.automaton().peek(v) == pe::Verdict::Accept) {
          z = v;
          break;
        }
      }
      if (!z || log.ask_m("witness", *z) != uc::Outcome::Accepted) {
        throw RefutationError("no length-" + std::to_string(n) + " string is accepted by M");
      }
      cert.kind = Contradiction::RejectedButWitnessed;
      cert.challenge_in_l_prime = true;
      break;
    }
    default:
      cert.kind = Contradiction::BudgetExhausted;
      cert.challenge_in_l_prime = false;
      break;
  }
  cert.after = world.snapshot();
  return cert;
}

ReplayReport replay_certificate(const Certificate& cert) {
  ReplayReport report;
  auto fail = [&](std::string why) { report.failures.push_back(std::move(why)); };

  sim::EvolutionaryUC world;
  try {
    world = sim::EvolutionaryUC::restore(cert.before);
  } catch (const std::exception& e) {
    fail(std::string("before snapshot does not restore: ") + e.what());
    return report;
  }

  Polynomial f;
  try {
    f = Polynomial::parse(cert.budget_function);
  } catch (const std::exception& e) {
    fail(std::string("budget function: ") + e.what());
    return report;
  }
  Limits lim;
  try {
    lim = limits_for(world, f, cert.threshold, cert.k);
  } catch (const std::exception& e) {
    fail(e.what());
    return report;
  }
  const auto& w = cert.challenge;
  const std::size_t n = w.size();
  if (lim.m1 != cert.m1) fail("m1 is " + std::to_string(lim.m1) + ", certificate says " + std::to_string(cert.m1));
  if (lim.m != cert.m) fail("m is " + std::to_string(lim.m) + ", certificate says " + std::to_string(cert.m));
  if (n <= lim.m || n <= lim.t) fail("challenge is not longer than m and t");
  if (f(n) != cert.budget) fail("budget is not f(|w|)");
  try {
    pe::require_bits(w);
  } catch (const std::exception& e) {
    fail(e.what());
    return report;
  }
  if (!report.failures.empty()) return report;

  if (to_json(analyze_path(world, cert.decider, w, cert.budget)) != cert.analysis) {
    fail("path analysis of M' on the challenge differs");
  }

  const auto scan = sim::procedures::scan();
  std::size_t decide_entries = 0;
  std::optional<uc::Outcome> live_decision;
  for (std::size_t i = 0; i < cert.transcript.size(); ++i) {
    const auto& e = cert.transcript[i];
    uc::Outcome got;
    try {
      if (e.actor == "M'") {
        if (e.input != w) fail("entry " + std::to_string(i) + ": M' asked about something other than w");
        got = uc::run(world, cert.decider, e.input, cert.budget).outcome;
        ++decide_entries;
        live_decision = got;
      } else if (e.actor == "M") {
        got = uc::run(world, scan, e.input, sim::procedures::scan_budget(e.input.size())).outcome;
      } else {
        fail("entry " + std::to_string(i) + ": unknown actor '" + e.actor + "'");
        continue;
      }
    } catch (const std::exception& ex) {
      fail("entry " + std::to_string(i) + ": " + ex.what());
      continue;
    }
    if (got != e.outcome) {
      fail("entry " + std::to_string(i) + " (" + e.actor + " on '" + e.input + "'): replay gives " +
           std::string(uc::to_string(got)) + ", certificate says " +
           std::string(uc::to_string(e.outcome)));
    }
  }
  if (decide_entries != 1) fail("expected exactly one M' entry");
  if (live_decision != cert.decider_outcome) fail("recorded M' verdict does not match the transcript");

  // The decider's answer on w still stands in the final world.
  if (live_decision) {
    auto later = world.fork();
    if (uc::run(later, cert.decider, w, cert.budget).outcome != *live_decision) {
      fail("M' answers w differently in the final world");
    }
  }

  auto answered = [&](const char* phase, const std::string& input, uc::Outcome o) {
    return std::any_of(cert.transcript.begin(), cert.transcript.end(), [&](const TranscriptEntry& e) {
      return e.actor == "M" && e.phase == phase && e.input == input && e.outcome == o;
    });
  };
  switch (cert.kind) {
    case Contradiction::AcceptedButEmptied:
      if (cert.decider_outcome != uc::Outcome::Accepted) fail("M' did not accept w");
      if (cert.challenge_in_l_prime) fail("certificate claims w is in L'");
      for (const auto& v : bit_strings(n)) {
        if (!answered("verify", v, uc::Outcome::Rejected)) fail("no recorded rejection of " + v);
        if (world.automaton().peek(v) != pe::Verdict::Reject) fail(v + " is accepted in the final world");
      }
      break;
    case Contradiction::RejectedButWitnessed: {
      if (cert.decider_outcome != uc::Outcome::Rejected) fail("M' did not reject w");
      if (!cert.challenge_in_l_prime) fail("certificate does not claim w is in L'");
      bool witnessed = std::any_of(cert.transcript.begin(), cert.transcript.end(), [&](const TranscriptEntry& e) {
        return e.actor == "M" && e.phase == std::string("witness") && e.input.size() == n &&
               e.outcome == uc::Outcome::Accepted;
      });
      if (!witnessed) fail("no accepted witness of length |w|");
      break;
    }
    case Contradiction::BudgetExhausted:
      if (cert.decider_outcome != uc::Outcome::BudgetExhausted) fail("M' finished within the budget");
      break;
  }

  if (world.snapshot() != cert.after) fail("final world differs from the after snapshot");
  report.verified = report.failures.empty();
  return report;
}

nlohmann::json to_json(const Certificate& cert) {
  nlohmann::json transcript = nlohmann::json::array();
  for (const auto& e : cert.transcript) {
    transcript.push_back({{"phase", e.phase},
                          {"actor", e.actor},
                          {"input", e.input},
                          {"outcome", uc::to_string(e.outcome)}});
  }
  return {{"challenge", cert.challenge},
          {"budget", cert.budget},
          {"budget_function", cert.budget_function},
          {"threshold", cert.threshold},
          {"k", cert.k},
          {"m1", cert.m1},
          {"m", cert.m},
          {"decider", uc::to_document(cert.decider)},
          {"snapshots",
           {{"before", nlohmann::json::parse(cert.before)},
            {"after", nlohmann::json::parse(cert.after)}}},
          {"analysis", cert.analysis},
          {"transcript", transcript},
          {"verdicts",
           {{"decider", uc::to_string(cert.decider_outcome)},
            {"challenge_in_l_prime", cert.challenge_in_l_prime}}},
          {"contradiction", to_string(cert.kind)}};
}

Certificate certificate_from_json(const nlohmann::json& j) {
  Certificate c;
  c.challenge = j.at("challenge").get<std::string>();
  c.budget = j.at("budget").get<std::uint64_t>();
  c.budget_function = j.at("budget_function").get<std::string>();
  c.threshold = j.at("threshold").get<std::uint64_t>();
  c.k = j.at("k").get<std::uint64_t>();
  c.m1 = j.at("m1").get<std::uint64_t>();
  c.m = j.at("m").get<std::uint64_t>();
  c.decider = uc::procedure_from_json(j.at("decider"));
  c.before = j.at("snapshots").at("before").dump();
  c.after = j.at("snapshots").at("after").dump();
  c.analysis = j.at("analysis");
  for (const auto& e : j.at("transcript")) {
    c.transcript.push_back({e.at("phase").get<std::string>(), e.at("actor").get<std::string>(),
                            e.at("input").get<std::string>(),
                            uc::outcome_from_string(e.at("outcome").get<std::string>())});
  }
  c.decider_outcome = uc::outcome_from_string(j.at("verdicts").at("decider").get<std::string>());
  c.challenge_in_l_prime = j.at("verdicts").at("challenge_in_l_prime").get<bool>();
  c.kind = contradiction_from_string(j.at("contradiction").get<std::string>());
  return c;
}

}  // namespace evoverse::analysis
