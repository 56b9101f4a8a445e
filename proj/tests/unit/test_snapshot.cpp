#include <doctest.h>

#include <random>

#include "evoverse/pe/snapshot.hpp"

using namespace evoverse::pe;

TEST_CASE("snapshot of a fresh machine") {
  PEAutomaton m;
  CHECK(snapshot(m) == R"({"accepting":[],"clock":0,"start":0,"states":[0],"transitions":[]})");
}

TEST_CASE("restored fresh machine evolves exactly like its twin") {
  PEAutomaton original;
  auto restored = restore(snapshot(original));
  auto a = original.query("101");
  auto b = restored.query("101");
  CHECK(a.verdict == Verdict::Accept);
  CHECK(a.verdict == b.verdict);
  CHECK(a.record == b.record);
  CHECK(snapshot(original) == snapshot(restored));
}

TEST_CASE("snapshot taken after 101 still rejects 10") {
  PEAutomaton m;
  m.query("101");
  auto bytes = snapshot(m);
  CHECK(bytes ==
        R"({"accepting":[3],"clock":7,"start":0,"states":[0,1,2,3],"transitions":[[0,1,1],[1,0,2],[2,1,3]]})");
  auto restored = restore(bytes);
  CHECK(restored == m);
  CHECK(restored.query("10").verdict == Verdict::Reject);
}

TEST_CASE("identical query sequences give identical snapshot bytes") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 50; ++round) {
    PEAutomaton a, b;
    for (int i = 0; i < 20; ++i) {
      std::string x(rng() % 7, '0');
      for (auto& c : x) c = (rng() & 1) ? '1' : '0';
      a.query(x);
      b.query(x);
    }
    CHECK(snapshot(a) == snapshot(b));
    auto restored = restore(snapshot(a));
    CHECK(snapshot(restored) == snapshot(a));
    // fresh ids continue from the restored state set
    std::string probe = "1111111111";
    CHECK(restored.query(probe).record == a.query(probe).record);
  }
}

TEST_CASE("malformed snapshots name the violated invariant") {
  auto invariant_of = [](std::string_view bytes) {
    try {
      restore(bytes);
    } catch (const SnapshotError& e) {
      return e.invariant();
    }
    return std::string("none");
  };
  CHECK(invariant_of("not json") == "json");
  CHECK(invariant_of("[]") == "object");
  CHECK(invariant_of(R"({"start":0,"transitions":[],"accepting":[],"clock":0})") == "missing-field");
  CHECK(invariant_of(R"({"states":[0,0],"start":0,"transitions":[],"accepting":[],"clock":0})") ==
        "states-unique");
  CHECK(invariant_of(R"({"states":[1],"start":0,"transitions":[],"accepting":[],"clock":0})") ==
        "start-in-states");
  CHECK(invariant_of(
            R"({"states":[0,1],"start":0,"transitions":[[0,2,1]],"accepting":[],"clock":0})") ==
        "transition-bit");
  CHECK(invariant_of(
            R"({"states":[0,1],"start":0,"transitions":[[0,1,5]],"accepting":[],"clock":0})") ==
        "transition-endpoint");
  CHECK(invariant_of(
            R"({"states":[0,1],"start":0,"transitions":[[0,1,1],[0,1,0]],"accepting":[],"clock":0})") ==
        "partial-determinism");
  CHECK(invariant_of(R"({"states":[0],"start":0,"transitions":[],"accepting":[4],"clock":0})") ==
        "accepting-subset");
  CHECK(invariant_of(R"({"states":[0],"start":0,"transitions":[],"accepting":[],"clock":-1})") ==
        "clock");
}

TEST_CASE("unsorted but valid snapshot is canonicalised on restore") {
  auto m = restore(
      R"({"transitions":[[1,0,2],[0,1,1]],"states":[2,0,1],"start":0,"accepting":[2],"clock":5})");
  CHECK(snapshot(m) ==
        R"({"accepting":[2],"clock":5,"start":0,"states":[0,1,2],"transitions":[[0,1,1],[1,0,2]]})");
}

TEST_CASE("query log entries") {
  PEAutomaton m;
  CHECK(query_log_entry("101", m.query("101")).dump() ==
        R"({"case":"case3","clock_delta":7,"input":"101","verdict":"accept"})");
  CHECK(query_log_entry("10", m.query("10")).dump() ==
        R"({"case":"case2-reject","clock_delta":0,"input":"10","verdict":"reject"})");
}
