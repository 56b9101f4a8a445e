#include <doctest.h>

#include <random>

#include "evoverse/sim/evolutionary_uc.hpp"
#include "evoverse/sim/procedures.hpp"
#include "evoverse/sim/static_uc.hpp"
#include "evoverse/uc/executor.hpp"

using namespace evoverse;
using uc::Answer;
using uc::Configuration;
using uc::StateId;

namespace {

Configuration trailing(std::string left) { return {StateId::halt(), std::move(left), '_', ""}; }

std::vector<std::string> strings_of_length(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) {
    std::string s(n, '0');
    for (std::size_t b = 0; b < n; ++b) {
      if (i >> (n - 1 - b) & 1) s[b] = '1';
    }
    out.push_back(s);
  }
  return out;
}

Configuration random_configuration(std::mt19937_64& rng) {
  static const char symbols[] = {'0', '1', '_'};
  auto word = [&](std::size_t max) {
    std::string s(rng() % (max + 1), '0');
    for (auto& c : s) c = symbols[rng() % 3];
    return s;
  };
  Configuration c;
  c.state = (rng() % 2) ? StateId::halt() : StateId::q(rng() % 3);
  c.left = (rng() % 4 == 0) ? "" : word(5);
  c.head = (rng() % 2) ? '_' : symbols[rng() % 3];
  c.right = (rng() % 3 == 0) ? "" : word(5);
  return c;
}

}  // namespace

TEST_CASE("evolutionary success box") {
  SUBCASE("trailing-blank halt consults PT1 and persists") {
    sim::EvolutionaryUC e;
    CHECK(e.success(trailing("_10")) == Answer::Yes);
    CHECK(e.oracle_log().back().outcome.record.case_taken == pe::EvolveCase::CrashExtend);
    CHECK(e.success(trailing("_10")) == Answer::Yes);
    CHECK(e.oracle_log().back().outcome.record.empty());
  }
  SUBCASE("leading-blank halt is YES without touching the automaton") {
    sim::EvolutionaryUC e;
    CHECK(e.success({StateId::halt(), "", '_', "101"}) == Answer::Yes);
    CHECK(e.success({StateId::halt(), "", '_', ""}) == Answer::Yes);
    CHECK(e.oracle_log().empty());
    CHECK(e.automaton() == pe::PEAutomaton());
  }
  SUBCASE("flooding length two makes every length-one string NO") {
    sim::EvolutionaryUC e;
    for (const auto& v : strings_of_length(2)) CHECK(e.success(trailing("_" + v)) == Answer::Yes);
    CHECK(e.success(trailing("_0")) == Answer::No);
    CHECK(e.success(trailing("_1")) == Answer::No);
  }
  SUBCASE("work symbols left on the tape are NO") {
    sim::EvolutionaryUC e;
    CHECK(e.success(trailing("_1X")) == Answer::No);
    CHECK(e.oracle_log().empty());
  }
  SUBCASE("blanks inside the tape are stripped") {
    sim::EvolutionaryUC e;
    CHECK(e.success(trailing("__1_0")) == Answer::Yes);
    CHECK(e.oracle_log().back().input == "10");
  }
}

TEST_CASE("evolutionary and static success boxes differ only on trailing-blank halts") {
  std::mt19937_64 rng(11);
  sim::EvolutionaryUC e;
  sim::StaticUC v;
  // pre-evolve so that E answers NO somewhere
  for (const auto& s : strings_of_length(3)) e.success(trailing("_" + s));
  for (int i = 0; i < 20000; ++i) {
    auto c = random_configuration(rng);
    auto a_e = e.success(c);
    auto a_v = v.success(c);
    if (a_e != a_v) {
      CHECK(uc::is_trailing_blank_halt(c));
      CHECK_FALSE(uc::is_leading_blank_halt(c));
    }
  }
}

TEST_CASE("static box answers do not depend on call order") {
  std::mt19937_64 rng(12);
  std::vector<Configuration> configs;
  for (int i = 0; i < 10000; ++i) configs.push_back(random_configuration(rng));
  sim::StaticUC forward, backward;
  std::vector<Answer> a(configs.size()), b(configs.size());
  for (std::size_t i = 0; i < configs.size(); ++i) a[i] = forward.success(configs[i]);
  for (std::size_t i = configs.size(); i-- > 0;) b[i] = backward.success(configs[i]);
  CHECK(a == b);
}

TEST_CASE("branches are independent") {
  sim::EvolutionaryUC fresh;
  auto a = fresh.fork();
  auto b = fresh.fork();
  CHECK(a.snapshot() == b.snapshot());

  auto scan = sim::procedures::scan();
  CHECK(uc::run(a, scan, "101", 10).accepted());
  CHECK_FALSE(uc::run(a, scan, "10", 10).accepted());
  CHECK(uc::run(b, scan, "10", 10).accepted());
  CHECK(fresh.snapshot() == sim::EvolutionaryUC().snapshot());

  sim::EvolutionaryUC flooded;
  for (const auto& v : strings_of_length(2)) uc::run(flooded, scan, v, 10);
  auto c = flooded.branch();
  auto d = flooded.branch();
  CHECK_FALSE(uc::run(*c, scan, "0", 10).accepted());
  CHECK_FALSE(uc::run(*d, scan, "0", 10).accepted());
}

TEST_CASE("flooding length n+1 empties length n, n <= 6") {
  auto scan = sim::procedures::scan();
  for (std::size_t n = 0; n <= 6; ++n) {
    sim::EvolutionaryUC base;
    auto fresh = base.fork();
    for (const auto& v : strings_of_length(n + 1)) {
      CHECK(uc::run(base, scan, v, sim::procedures::scan_budget(n + 1)).accepted());
    }
    for (const auto& s : strings_of_length(n)) {
      auto flooded_branch = base.fork();
      CHECK_FALSE(uc::run(flooded_branch, scan, s, sim::procedures::scan_budget(n)).accepted());
      auto fresh_branch = fresh.fork();
      CHECK(uc::run(fresh_branch, scan, s, sim::procedures::scan_budget(n)).accepted());
    }
  }
}

TEST_CASE("repeating a configuration query returns the earlier answer") {
  std::mt19937_64 rng(21);
  sim::EvolutionaryUC e;
  std::map<std::string, Answer> seen;
  for (int i = 0; i < 3000; ++i) {
    std::string x(rng() % 7, '0');
    for (auto& c : x) c = (rng() & 1) ? '1' : '0';
    auto c = trailing("_" + x);
    auto a = e.success(c);
    auto [it, fresh] = seen.try_emplace(c.render(), a);
    CHECK(it->second == a);
  }
}

TEST_CASE("E-state snapshot round trip") {
  sim::EvolutionaryUC e;
  auto scan = sim::procedures::scan();
  uc::run(e, scan, "101", 10);
  uc::run(e, scan, "10", 10);
  CHECK(e.oracle_log_jsonl() ==
        "{\"case\":\"case3\",\"clock_delta\":7,\"input\":\"101\",\"verdict\":\"accept\"}\n"
        "{\"case\":\"case2-reject\",\"clock_delta\":0,\"input\":\"10\",\"verdict\":\"reject\"}\n");
  auto restored = sim::EvolutionaryUC::restore(e.snapshot());
  CHECK(restored.automaton() == e.automaton());
  CHECK_FALSE(uc::run(restored, scan, "10", 10).accepted());
  CHECK(e.evolution_ticks() == 7);
}
