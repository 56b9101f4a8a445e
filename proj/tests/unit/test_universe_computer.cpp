#include <doctest.h>

#include <random>

#include "evoverse/sim/evolutionary_uc.hpp"
#include "evoverse/sim/procedures.hpp"
#include "evoverse/sim/static_uc.hpp"
#include "evoverse/uc/executor.hpp"
#include "evoverse/uc/turing.hpp"
#include "reference_tm.hpp"

using namespace evoverse;
using namespace evoverse::uc;

namespace {

Instruction ins(const char* from, char read, const char* to, char write, char move) {
  return {StateId::parse(from), read, StateId::parse(to), write, move_from_char(move)};
}

Configuration conf(const char* state, std::string left, char head, std::string right) {
  return {StateId::parse(state), std::move(left), head, std::move(right)};
}

}  // namespace

TEST_CASE("state ids") {
  CHECK(StateId::parse("h").is_halt());
  CHECK(StateId::parse("q12").index() == 12);
  CHECK(StateId::q(3).name() == "q3");
  CHECK_THROWS(StateId::parse("q"));
  CHECK_THROWS(StateId::parse("p1"));
  CHECK_THROWS(StateId::parse("q1x"));
}

TEST_CASE("determination condition") {
  SUBCASE("scan procedure is valid") {
    auto p = Procedure::validate(
        {ins("q0", '_', "h", '_', 'R'), ins("h", '0', "h", '0', 'R'), ins("h", '1', "h", '1', 'R')});
    CHECK(p.size() == 3);
    CHECK(p == sim::procedures::scan());
  }
  SUBCASE("shared key is a violation naming both instructions") {
    try {
      Procedure::validate({ins("q0", '_', "h", '_', 'R'), ins("q0", '_', "q1", '0', 'L')});
      FAIL("expected a violation");
    } catch (const DeterminationViolation& v) {
      CHECK(v.first() == ins("q0", '_', "h", '_', 'R'));
      CHECK(v.second() == ins("q0", '_', "q1", '0', 'L'));
    }
  }
  SUBCASE("empty set is a valid procedure") { CHECK(Procedure::validate({}).empty()); }
  SUBCASE("exact duplicates collapse") {
    CHECK(Procedure::validate({ins("q0", '_', "h", '_', 'R'), ins("q0", '_', "h", '_', 'R')})
              .size() == 1);
  }
  SUBCASE("symbols outside the alphabet") {
    CHECK_THROWS_AS(Procedure::validate({ins("q0", 'X', "h", '_', 'R')}), std::invalid_argument);
    CHECK(Procedure::validate({ins("q0", 'X', "h", '_', 'R')}, Alphabet("X")).size() == 1);
  }
}

TEST_CASE("procedure JSON format") {
  auto j = to_json(sim::procedures::scan());
  CHECK(j.dump() == R"([["h","0","h","0","R"],["h","1","h","1","R"],["q0","_","h","_","R"]])");
  CHECK(procedure_from_json(j) == sim::procedures::scan());
  CHECK_THROWS(procedure_from_json(nlohmann::json::parse(R"([["q0","_","h","_"]])")));
  CHECK_THROWS(procedure_from_json(nlohmann::json::parse(R"([["q0","_","h","_","U"]])")));
  auto with_alphabet = nlohmann::json::parse(
      R"({"alphabet":"X","instructions":[["q0","_","q1","X","R"]]})");
  CHECK(procedure_from_json(with_alphabet).size() == 1);
}

TEST_CASE("selector") {
  auto scan = sim::procedures::scan();
  CHECK(scan.select(Configuration::initial("101")) == ins("q0", '_', "h", '_', 'R'));
  CHECK_FALSE(scan.select(conf("q1", "", '_', "")).has_value());
  CHECK_FALSE(Procedure().select(Configuration::initial("101")).has_value());
}

TEST_CASE("transition box rewrite") {
  sim::StaticUC v;
  auto c0 = Configuration::initial("101");
  CHECK(c0 == conf("q0", "", '_', "101"));

  auto c1 = v.transition(c0, ins("q0", '_', "h", '_', 'R'));
  REQUIRE(c1);
  CHECK(*c1 == conf("h", "_", '1', "01"));

  auto extended = v.transition(conf("h", "_10", '1', ""), ins("h", '1', "h", '1', 'R'));
  REQUIRE(extended);
  CHECK(*extended == conf("h", "_101", '_', ""));

  CHECK_FALSE(v.transition(c0, ins("q5", '0', "h", '0', 'R')).has_value());

  auto left_edge = v.transition(c0, ins("q0", '_', "h", '1', 'L'));
  REQUIRE(left_edge);
  CHECK(*left_edge == conf("h", "", '_', "1101"));

  auto interior_left = v.transition(conf("q2", "_1", '0', "1"), ins("q2", '0', "q3", '1', 'L'));
  REQUIRE(interior_left);
  CHECK(*interior_left == conf("q3", "_", '1', "11"));
}

TEST_CASE("static success box") {
  sim::StaticUC v;
  CHECK(v.success(conf("h", "", '_', "101")) == Answer::Yes);
  CHECK(v.success(conf("h", "101", '_', "")) == Answer::Yes);
  CHECK(v.success(conf("q3", "", '_', "")) == Answer::No);
  CHECK(v.success(conf("q0", "", '_', "")) == Answer::No);
  CHECK(v.success(conf("h", "1", '_', "1")) == Answer::No);
  CHECK(v.success(conf("h", "", '1', "")) == Answer::No);
}

TEST_CASE("configuration strings") {
  CHECK(conf("h", "_101", '_', "").associated_string() == "101");
  CHECK(conf("h", "", '_', "").associated_string() == "");
  CHECK(conf("h", "_1", '_', "0_").associated_string() == "1_0");
  CHECK(conf("q2", "_10", '1', "").render() == "q2|_10|[1]|");
  CHECK(halted_input_string(conf("h", "_1_0", '_', "")) == "10");
  CHECK_FALSE(halted_input_string(conf("h", "_1X", '_', "")).has_value());
}

TEST_CASE("run M_scan on 101 over the static box") {
  sim::StaticUC v;
  auto path = run(v, sim::procedures::scan(), "101", 100);
  CHECK(path.outcome == Outcome::Accepted);
  std::vector<Configuration> expected{
      conf("q0", "", '_', "101"), conf("h", "_", '1', "01"), conf("h", "_1", '0', "1"),
      conf("h", "_10", '1', ""), conf("h", "_101", '_', "")};
  CHECK(path.configs == expected);
  CHECK(path.time() == 5);
  CHECK(path.clock_cost == v.meter().ticks());
}

TEST_CASE("empty procedure is stuck at C0") {
  sim::StaticUC v;
  auto path = run(v, Procedure(), "101", 100);
  CHECK(path.outcome == Outcome::Rejected);
  CHECK(path.time() == 1);
}

TEST_CASE("M_scan on a fresh evolutionary box agrees with PT1") {
  sim::EvolutionaryUC e;
  auto path = run(e, sim::procedures::scan(), "10", 100);
  CHECK(path.outcome == Outcome::Accepted);
  pe::PEAutomaton oracle;
  CHECK(oracle.query("10").verdict == pe::Verdict::Accept);
  CHECK(e.automaton() == oracle);
}

TEST_CASE("budget exhaustion and suspension") {
  sim::StaticUC v;
  auto scan = sim::procedures::scan();
  CHECK(run(v, scan, "101", 3).outcome == Outcome::BudgetExhausted);
  CHECK(run(v, scan, "101", sim::procedures::scan_budget(3)).outcome == Outcome::Accepted);

  Run a(v, scan, "11", 100);
  Run b(v, scan, "0", 100);
  a.resume(1);
  CHECK(a.path().outcome == Outcome::Suspended);
  b.resume(100);
  CHECK(b.finished());
  a.resume(100);
  CHECK(a.path().outcome == Outcome::Accepted);
  CHECK(a.path().time() == 4);
  CHECK_FALSE(a.step());
  CHECK_THROWS_AS(Run(v, scan, "12", 5), pe::MalformedInput);
}

TEST_CASE("computable functions") {
  sim::StaticUC v;
  auto scan = sim::procedures::scan();
  CHECK(compute_function(v, scan, "101", 100) == "101");
  CHECK(compute_function(v, Procedure(), "101", 100) == std::nullopt);
  CHECK(compute_function(v, scan, "", 100) == "");
}

TEST_CASE("experience set is well-defined and monotone") {
  sim::EvolutionaryUC e;
  ExperienceSet exp;
  auto scan = sim::procedures::scan();
  run(e, scan, "101", 10, &exp);
  run(e, scan, "10", 10, &exp);
  run(e, scan, "101", 10, &exp);
  CHECK(exp.size() == 2);
  CHECK(exp.lookup(scan, "101")->outcome == Outcome::Accepted);
  CHECK(exp.lookup(scan, "10")->outcome == Outcome::Rejected);
  run(e, scan, "1111", 2, &exp);  // budget exhausted: not an observation
  CHECK(exp.size() == 2);

  ComputationPath forged;
  forged.configs.push_back(Configuration::initial("101"));
  forged.outcome = Outcome::Rejected;
  CHECK_THROWS_AS(exp.record(scan, "101", forged), WellDefinednessViolation);
}

TEST_CASE("interleaved suspended runs keep the experience set well-defined") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 50; ++round) {
    sim::EvolutionaryUC e;
    ExperienceSet exp;
    std::vector<Run> runs;
    for (int i = 0; i < 12; ++i) {
      std::string x(rng() % 5, '0');
      for (auto& c : x) c = (rng() & 1) ? '1' : '0';
      runs.emplace_back(e, sim::procedures::scan(), x, 20);
    }
    bool progress = true;
    while (progress) {
      progress = false;
      for (auto& r : runs) {
        if (r.finished()) continue;
        r.resume(1 + rng() % 3);
        progress = true;
        if (r.finished()) exp.record(r.procedure(), r.input(), r.path());
      }
    }
    CHECK(exp.size() <= runs.size());
  }
}

TEST_CASE("selector consistency and clock linearity") {
  std::mt19937_64 rng(7);
  sim::EvolutionaryUC e;
  sim::StaticUC v;
  auto scan = sim::procedures::scan();
  for (int i = 0; i < 300; ++i) {
    std::string x(rng() % 9, '0');
    for (auto& c : x) c = (rng() & 1) ? '1' : '0';
    auto path = run(e, scan, x, 50);
    run(v, scan, x, 50);
    for (const auto& c : path.configs) {
      if (auto chosen = scan.select(c)) CHECK(rewrite(c, *chosen).has_value());
    }
  }
  for (const auto& charge : e.meter().log()) CHECK(e.clock_bound().admits(charge));
  for (const auto& charge : v.meter().log()) CHECK(v.clock_bound().admits(charge));
}

TEST_CASE("compiling Turing machines") {
  SUBCASE("one-rule machine") {
    TMDescription tm{0, 1, "", {{0, '_', 1, '_', Move::Right}}};
    auto p = compile_tm(tm);
    CHECK(p == Procedure::validate({ins("q0", '_', "h", '_', 'R')}));
    sim::StaticUC v;
    auto path = run(v, p, "", 10);
    auto ref = reference::simulate(tm, "", 10);
    CHECK(path.accepted());
    CHECK(ref.result == reference::Result::Accept);
    CHECK(path.time() == ref.steps + 1);
  }
  SUBCASE("nondeterministic machine is refused") {
    TMDescription tm{0, 1, "", {{0, '_', 1, '_', Move::Right}, {0, '_', 2, '0', Move::Left}}};
    CHECK_THROWS_AS(compile_tm(tm), NondeterministicMachine);
  }
  SUBCASE("divergence on 1* is respected on both sides") {
    // q0: step right; q2 bounces between the first two cells while it sees 1.
    TMDescription tm{0, 1, "",
                     {{0, '_', 2, '_', Move::Right},
                      {2, '1', 3, '1', Move::Left},
                      {3, '_', 2, '_', Move::Right},
                      {2, '_', 1, '_', Move::Right}}};
    auto p = compile_tm(tm);
    sim::StaticUC v;
    for (std::string x : {"1", "11", "111"}) {
      CHECK(run(v, p, x, 500).outcome == Outcome::BudgetExhausted);
      CHECK(reference::simulate(tm, x, 500).result == reference::Result::OutOfSteps);
    }
    CHECK(run(v, p, "", 500).accepted());
    CHECK(reference::simulate(tm, "", 500).result == reference::Result::Accept);
  }
  SUBCASE("state renaming") {
    TMDescription tm{5, 9, "", {{5, '_', 7, '_', Move::Right}, {7, '0', 9, '0', Move::Right}}};
    auto p = compile_tm(tm);
    CHECK(p == Procedure::validate({ins("q0", '_', "q1", '_', 'R'), ins("q1", '0', "h", '0', 'R')}));
    CHECK_THROWS(compile_tm(TMDescription{1, 1, "", {}}));
  }
}

TEST_CASE("random 4-state machines match the reference simulator") {
  std::mt19937_64 rng(4);
  const char symbols[] = {'0', '1', '_'};
  for (int machine = 0; machine < 20; ++machine) {
    TMDescription tm;
    tm.start = 0;
    tm.halt = 3;
    for (int s = 0; s < 4; ++s) {
      for (char a : symbols) {
        if (rng() % 5 == 0) continue;
        tm.rules.push_back({s, a, static_cast<int>(rng() % 4), symbols[rng() % 3],
                            (rng() & 1) ? Move::Left : Move::Right});
      }
    }
    auto p = compile_tm(tm);
    for (int i = 0; i < 50; ++i) {
      std::string x(rng() % 7, '0');
      for (auto& c : x) c = (rng() & 1) ? '1' : '0';
      sim::StaticUC v;
      auto path = run(v, p, x, 200);
      auto ref = reference::simulate(tm, x, 200);
      switch (ref.result) {
        case reference::Result::Accept:
          CHECK(path.outcome == Outcome::Accepted);
          break;
        case reference::Result::Reject:
          CHECK(path.outcome == Outcome::Rejected);
          break;
        case reference::Result::OutOfSteps:
          CHECK(path.outcome == Outcome::BudgetExhausted);
          break;
      }
      CHECK(path.time() == ref.steps + 1);
    }
  }
}
