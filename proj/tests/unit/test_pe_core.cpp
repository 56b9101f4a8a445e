#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "evoverse/pe/automaton.hpp"
#include "evoverse/pe/counter_process.hpp"

using namespace evoverse::pe;

namespace {

std::string random_bits(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::bernoulli_distribution bit(0.5);
  std::string s(len(rng), '0');
  for (auto& c : s) c = bit(rng) ? '1' : '0';
  return s;
}

}  // namespace

TEST_CASE("counter process assigns values in query order") {
  CounterProcess g;
  CHECK(g.evaluate(7) == 1);
  CHECK(g.evaluate(9) == 2);
  CHECK(g.evaluate(1) == 3);
  CHECK(g.evaluate(11) == 4);

  auto before = g.assignments();
  CHECK(g.evaluate(7) == 1);
  CHECK(g.assignments() == before);
  CHECK_FALSE(g.lookup(5).has_value());

  CounterProcess alternate;
  CHECK(alternate.evaluate(9) == 1);
  CHECK(alternate.evaluate(1) == 2);
  CHECK(alternate.evaluate(7) == 3);
  CHECK(alternate.evaluate(11) == 4);
}

TEST_CASE("counter process is an injection onto 1..|W| and replay-stable") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::uint64_t> pick(0, 40);
  for (int round = 0; round < 200; ++round) {
    CounterProcess g;
    std::map<std::uint64_t, std::uint64_t> first_seen;
    for (int i = 0; i < 60; ++i) {
      auto n = pick(rng);
      auto v = g.evaluate(n);
      auto [it, fresh] = first_seen.try_emplace(n, v);
      CHECK(it->second == v);
    }
    std::set<std::uint64_t> values;
    for (const auto& [n, v] : g.assignments()) values.insert(v);
    REQUIRE(values.size() == g.size());
    CHECK(*values.begin() == 1);
    CHECK(*values.rbegin() == g.size());
  }
}

TEST_CASE("PT1 worked example: 101 then 10") {
  PEAutomaton m;
  auto first = m.query("101");
  CHECK(first.verdict == Verdict::Accept);
  CHECK(first.record.case_taken == EvolveCase::CrashExtend);
  CHECK(first.record.added_states == std::vector<StateId>{1, 2, 3});
  CHECK(first.record.added_transitions ==
        std::vector<Transition>{{0, 1, 1}, {1, 0, 2}, {2, 1, 3}});
  CHECK(first.record.added_accepting == std::vector<StateId>{3});
  CHECK(m.accepting().contains(3));
  CHECK(m.clock() == 7);

  auto second = m.query("10");
  CHECK(second.verdict == Verdict::Reject);
  CHECK(second.record.case_taken == EvolveCase::FrontierReject);
  CHECK(second.record.empty());
}

TEST_CASE("PT1 accepts 10 when it comes first") {
  PEAutomaton m;
  auto out = m.query("10");
  CHECK(out.verdict == Verdict::Accept);
  CHECK(out.record.case_taken == EvolveCase::CrashExtend);
}

TEST_CASE("PT1 replay of 101 leaves the machine unchanged") {
  PEAutomaton m;
  CHECK(m.query("101").verdict == Verdict::Accept);
  auto again = m.query("101");
  CHECK(again.verdict == Verdict::Accept);
  CHECK(again.record.case_taken == EvolveCase::Accepted);
  CHECK(again.record.empty());
}

TEST_CASE("PT1 empty input on a fresh machine promotes the start state") {
  PEAutomaton m;
  auto out = m.query("");
  CHECK(out.verdict == Verdict::Accept);
  CHECK(out.record.case_taken == EvolveCase::FrontierPromote);
  CHECK(out.record.added_accepting == std::vector<StateId>{0});
  CHECK(out.record.clock_delta() == 1);
}

TEST_CASE("PT1 case2 promotion when the end state has no accepting neighbour") {
  PEAutomaton m;
  m.query("110");  // builds 0-1->1-1->2-0->3, F={3}
  auto out = m.query("1");
  CHECK(out.verdict == Verdict::Accept);
  CHECK(out.record.case_taken == EvolveCase::FrontierPromote);
  CHECK(out.record.added_accepting == std::vector<StateId>{1});
  // q0 now reaches the promoted state in one step
  CHECK(m.query("").verdict == Verdict::Reject);
  CHECK_FALSE(m.accepting().contains(0));
}

TEST_CASE("PT1 rejects symbols outside {0,1}") {
  PEAutomaton m;
  CHECK_THROWS_AS(m.query("102"), MalformedInput);
  CHECK(m.clock() == 0);
  CHECK(m.states().size() == 1);
}

TEST_CASE("max accepted length over a history") {
  CHECK(max_accepted_length({{"101", Verdict::Accept}, {"10", Verdict::Reject}}) == 3);
  CHECK(max_accepted_length({}) == 0);
  CHECK(max_accepted_length(
            {{"0", Verdict::Accept}, {"1111", Verdict::Accept}, {"11", Verdict::Reject}}) == 4);
}

TEST_CASE("property: PT1 invariants over random query sequences") {
  std::mt19937_64 rng(2024);
  for (int seq = 0; seq < 1000; ++seq) {
    PEAutomaton m;
    std::map<std::string, Verdict> first_verdict;
    std::vector<HistoryEntry> history;
    std::uint64_t additions = 0;
    const int length = 1 + static_cast<int>(rng() % 24);
    for (int i = 0; i < length; ++i) {
      const auto x = random_bits(rng, 8);
      const auto before = m;

      // Independent crash position: longest prefix of x that is a path.
      std::size_t consumed = 0;
      StateId at = before.start();
      bool crashed = false;
      for (char c : x) {
        auto it = before.transitions().find({at, c - '0'});
        if (it == before.transitions().end()) {
          crashed = true;
          break;
        }
        at = it->second;
        ++consumed;
      }
      bool could_reach = before.can_reach_accepting_in_one_step(at);

      const auto out = m.query(x);
      additions += out.record.clock_delta();
      history.push_back({x, out.verdict});

      // persistence
      auto [it, fresh] = first_verdict.try_emplace(x, out.verdict);
      CHECK(it->second == out.verdict);
      if (!fresh) CHECK(out.record.empty());

      // monotonicity
      CHECK(std::includes(m.states().begin(), m.states().end(), before.states().begin(),
                          before.states().end()));
      CHECK(std::includes(m.accepting().begin(), m.accepting().end(),
                          before.accepting().begin(), before.accepting().end()));
      for (const auto& [key, to] : before.transitions()) {
        auto found = m.transitions().find(key);
        REQUIRE(found != m.transitions().end());
        CHECK(found->second == to);
      }

      // case arithmetic
      if (crashed) {
        CHECK(out.record.case_taken == EvolveCase::CrashExtend);
        CHECK(out.record.added_states.size() == x.size() - consumed);
        CHECK(out.record.added_transitions.size() == x.size() - consumed);
        CHECK(out.record.added_accepting.size() == 1);
      } else if (before.accepting().contains(at)) {
        CHECK(out.record.case_taken == EvolveCase::Accepted);
      } else if (could_reach) {
        CHECK(out.record.case_taken == EvolveCase::FrontierReject);
        CHECK(out.verdict == Verdict::Reject);
      } else {
        CHECK(out.record.case_taken == EvolveCase::FrontierPromote);
        CHECK(out.record.added_accepting == std::vector<StateId>{at});
      }

      // one-step reachability never goes away
      for (StateId s : before.states()) {
        if (before.can_reach_accepting_in_one_step(s)) CHECK(m.can_reach_accepting_in_one_step(s));
      }
    }

    // partial determinism is structural in the map; endpoints stay in Q
    for (const auto& [key, to] : m.transitions()) {
      CHECK(m.states().contains(key.first));
      CHECK(m.states().contains(to));
    }
    CHECK(m.clock() == additions);
    CHECK(max_accepting_depth(m) == max_accepted_length(history));

    // replay every input: the first verdict is returned and nothing changes
    const auto settled = m;
    for (const auto& [x, v] : first_verdict) CHECK(m.query(x).verdict == v);
    CHECK(m == settled);
  }
}
