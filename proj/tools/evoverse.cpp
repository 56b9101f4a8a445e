// evoverse: headless driver for the universe-computer simulator.
//
// Every subcommand writes JSON lines to stdout. Failures print one JSON
// object {"error": {code, message}} to stderr and exit 1 (domain error) or
// 2 (usage error).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "evoverse/analysis/flood.hpp"
#include "evoverse/analysis/order.hpp"
#include "evoverse/analysis/polynomial.hpp"
#include "evoverse/analysis/realize.hpp"
#include "evoverse/analysis/refuter.hpp"
#include "evoverse/pe/snapshot.hpp"
#include "evoverse/service/http.hpp"
#include "evoverse/sim/evolutionary_uc.hpp"
#include "evoverse/sim/procedures.hpp"
#include "evoverse/sim/static_uc.hpp"
#include "evoverse/uc/executor.hpp"

using nlohmann::json;
using namespace evoverse;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const json& j) { std::cout << j.dump() << '\n'; }

// "101,10" -> {"101", "10"}; empty items are the empty string.
std::vector<std::string> split_inputs(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

// split_inputs, refusing the whole list if any item is not a bit string.
std::vector<std::string> bit_inputs(const std::string& s) {
  auto out = split_inputs(s);
  for (const auto& x : out) pe::require_bits(x);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << bytes;
}

uc::Procedure load_procedure(const std::string& name) {
  if (name == "scan") return sim::procedures::scan();
  if (name == "all" || name == "accept-all") return sim::procedures::accept_all();
  if (name == "none" || name == "reject-all") return sim::procedures::reject_all();
  if (name == "pair-equality") return sim::procedures::pair_equality();
  if (name == "same-length-member") return sim::procedures::same_length_member();
  return uc::procedure_from_json(json::parse(read_file(name)));
}

sim::EvolutionaryUC load_world(const std::string& snapshot_path) {
  if (snapshot_path.empty()) return {};
  return sim::EvolutionaryUC::restore(read_file(snapshot_path));
}

std::unique_ptr<uc::UniverseComputer> make_backend(const std::string& backend,
                                                   const std::string& snapshot_path) {
  if (backend == "static") {
    if (!snapshot_path.empty()) throw UsageError("--snapshot-in needs --backend evolutionary");
    return std::make_unique<sim::StaticUC>();
  }
  return std::make_unique<sim::EvolutionaryUC>(load_world(snapshot_path));
}

std::optional<std::uint64_t> env_u64(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw UsageError(std::string(name) + " is not a non-negative integer");
  }
}

int fail(int exit_code, std::string_view code, std::string_view message) {
  std::cerr << json{{"error", {{"code", code}, {"message", message}}}}.dump() << '\n';
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"universe-computer simulator: static and evolutionary backends"};
  app.require_subcommand(1);
  std::optional<std::uint64_t> seed;
  app.add_option("--seed", seed, "seed for anything random (session coins, ids)");

  const std::vector<std::string> backends{"static", "evolutionary"};

  // run
  auto* run_cmd = app.add_subcommand("run", "run a procedure on inputs");
  std::string run_backend = "evolutionary", run_proc = "scan", run_inputs, run_snap_in, run_snap_out;
  std::optional<std::size_t> run_budget;
  bool run_trace = false;
  run_cmd->add_option("--backend", run_backend)->check(CLI::IsMember(backends));
  run_cmd->add_option("--procedure", run_proc,
                      "scan | accept-all | reject-all | pair-equality | same-length-member | FILE");
  run_cmd->add_option("--inputs", run_inputs, "comma-separated bit strings")->required();
  run_cmd->add_option("--budget", run_budget, "max transition steps per run (default |x|+1 for scan)");
  run_cmd->add_option("--snapshot-in", run_snap_in, "start from this automaton snapshot");
  run_cmd->add_option("--snapshot-out", run_snap_out, "write the final automaton snapshot");
  run_cmd->add_flag("--trace", run_trace, "include every configuration");

  // pt1
  auto* pt1_cmd = app.add_subcommand("pt1", "query the evolving automaton directly");
  std::string pt1_inputs, pt1_snap_in, pt1_snap_out;
  pt1_cmd->add_option("--inputs", pt1_inputs, "comma-separated bit strings")->required();
  pt1_cmd->add_option("--snapshot-in", pt1_snap_in);
  pt1_cmd->add_option("--snapshot-out", pt1_snap_out);

  // flood
  auto* flood_cmd = app.add_subcommand("flood", "run M_scan on every string of length n+1");
  std::size_t flood_n = 0, flood_bound = analysis::kDefaultFloodBound;
  std::string flood_then, flood_fresh, flood_snap_in, flood_snap_out;
  flood_cmd->add_option("--n", flood_n)->required();
  flood_cmd->add_option("--bound", flood_bound, "largest n accepted");
  flood_cmd->add_option("--then", flood_then, "inputs to query on the flooded world");
  flood_cmd->add_option("--fresh-then", flood_fresh, "inputs to query on an unflooded branch");
  flood_cmd->add_option("--snapshot-in", flood_snap_in);
  flood_cmd->add_option("--snapshot-out", flood_snap_out);

  // order-exp
  auto* order_cmd = app.add_subcommand("order-exp", "compare two query orders");
  std::string order_a, order_b, order_backend = "evolutionary", order_snap_in;
  std::size_t jobs = 1;
  order_cmd->add_option("--first", order_a, "comma-separated inputs")->required();
  order_cmd->add_option("--second", order_b, "a permutation of --first")->required();
  order_cmd->add_option("--backend", order_backend)->check(CLI::IsMember(backends));
  order_cmd->add_option("--snapshot-in", order_snap_in);
  order_cmd->add_option("--jobs", jobs, "run the two branches in parallel when > 1")
      ->check(CLI::PositiveNumber);

  // refute
  auto* refute_cmd = app.add_subcommand("refute", "run the adversary against a fast decider");
  std::string refute_decider = "all", refute_f = "n^2", refute_out, refute_snap_in, refute_snap_out;
  std::optional<std::uint64_t> refute_t;
  std::uint64_t refute_k = 2;
  std::optional<std::string> refute_challenge;
  refute_cmd->add_option("--decider", refute_decider, "all | none | scan | FILE");
  refute_cmd->add_option("--f", refute_f, "step budget polynomial, e.g. n^2");
  refute_cmd->add_option("--t", refute_t, "threshold beyond which f(n) < 2^n");
  refute_cmd->add_option("--k", refute_k, "validity threshold");
  refute_cmd->add_option("--challenge", refute_challenge);
  refute_cmd->add_option("--out", refute_out, "write the certificate here");
  refute_cmd->add_option("--snapshot-in", refute_snap_in);
  refute_cmd->add_option("--snapshot-out", refute_snap_out);

  // realize
  auto* realize_cmd = app.add_subcommand("realize", "build static and evolving machines for a trace");
  std::string realize_trace, realize_pairs;
  auto* trace_opt = realize_cmd->add_option("--trace", realize_trace, "JSON file of {input, output}");
  realize_cmd->add_option("--pairs", realize_pairs, "inline pairs, e.g. ':NO,0:YES'")->excludes(trace_opt);

  // replay-cert
  auto* replay_cmd = app.add_subcommand("replay-cert", "verify a refutation certificate");
  std::string replay_path;
  replay_cmd->add_option("--cert", replay_path)->required();

  // serve
  auto* serve_cmd = app.add_subcommand("serve", "serve the session API over HTTP");
  std::string serve_host = "127.0.0.1";
  std::optional<int> serve_port;
  serve_cmd->add_option("--host", serve_host);
  serve_cmd->add_option("--port", serve_port, "default $EVOVERSE_PORT or 8080");

  // snapshot
  auto* snap_cmd = app.add_subcommand("snapshot", "dump or check an evolutionary world");
  std::string snap_in, snap_inputs, snap_out;
  snap_cmd->add_option("--in", snap_in, "snapshot to validate and canonicalise");
  snap_cmd->add_option("--inputs", snap_inputs, "run M_scan on these first");
  snap_cmd->add_option("--out", snap_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(2, "usage", e.what());
  }

  try {
    if (*run_cmd) {
      auto world = make_backend(run_backend, run_snap_in);
      const auto procedure = load_procedure(run_proc);
      for (const auto& x : bit_inputs(run_inputs)) {
        const auto budget = run_budget.value_or(sim::procedures::scan_budget(x.size()));
        auto path = uc::run(*world, procedure, x, budget);
        json line = {{"input", x},
                     {"outcome", uc::to_string(path.outcome)},
                     {"time", path.time()},
                     {"clock_cost", path.clock_cost}};
        if (path.accepted()) line["output"] = path.last().associated_string();
        if (run_trace) {
          json configs = json::array();
          for (const auto& c : path.configs) configs.push_back(c.render());
          line["configs"] = configs;
        }
        emit(line);
      }
      if (!run_snap_out.empty()) {
        auto* e = dynamic_cast<sim::EvolutionaryUC*>(world.get());
        if (!e) throw UsageError("--snapshot-out needs --backend evolutionary");
        write_file(run_snap_out, e->snapshot());
      }
    } else if (*pt1_cmd) {
      auto m = pt1_snap_in.empty() ? pe::PEAutomaton() : pe::restore(read_file(pt1_snap_in));
      for (const auto& x : bit_inputs(pt1_inputs)) {
        auto line = pe::query_log_entry(x, m.query(x));
        line["clock"] = m.clock();
        emit(line);
      }
      if (!pt1_snap_out.empty()) write_file(pt1_snap_out, pe::snapshot(m));
    } else if (*flood_cmd) {
      auto world = load_world(flood_snap_in);
      auto fresh = world.fork();
      emit(analysis::to_json(analysis::flood(world, flood_n, flood_bound)));
      const auto scan = sim::procedures::scan();
      auto ask = [&](sim::EvolutionaryUC& w, const std::string& which, const std::string& list) {
        if (list.empty() && which == "fresh") return;
        for (const auto& x : bit_inputs(list)) {
          auto path = uc::run(w, scan, x, sim::procedures::scan_budget(x.size()));
          emit({{"world", which}, {"input", x}, {"outcome", uc::to_string(path.outcome)}});
        }
      };
      if (flood_cmd->count("--then")) ask(world, "flooded", flood_then);
      if (flood_cmd->count("--fresh-then")) ask(fresh, "fresh", flood_fresh);
      if (!flood_snap_out.empty()) write_file(flood_snap_out, world.snapshot());
    } else if (*order_cmd) {
      auto world = make_backend(order_backend, order_snap_in);
      emit(analysis::to_json(analysis::order_experiment(bit_inputs(order_a), bit_inputs(order_b),
                                                        *world, jobs)));
    } else if (*refute_cmd) {
      auto world = load_world(refute_snap_in);
      analysis::RefuterOptions opts;
      opts.f = analysis::Polynomial::parse(refute_f);
      opts.threshold = refute_t;
      opts.k = refute_k;
      opts.challenge = refute_challenge;
      auto cert = analysis::refute_fast_decider(world, load_procedure(refute_decider), opts);
      auto doc = analysis::to_json(cert);
      if (refute_out.empty()) {
        emit(doc);
      } else {
        write_file(refute_out, doc.dump(2) + "\n");
        emit({{"certificate", refute_out},
              {"challenge", cert.challenge},
              {"budget", cert.budget},
              {"decider", uc::to_string(cert.decider_outcome)},
              {"contradiction", analysis::to_string(cert.kind)}});
      }
      if (!refute_snap_out.empty()) write_file(refute_snap_out, world.snapshot());
    } else if (*realize_cmd) {
      analysis::TraceSet trace;
      if (!realize_trace.empty()) {
        trace = analysis::trace_from_json(json::parse(read_file(realize_trace)));
      } else if (!realize_pairs.empty()) {
        for (const auto& item : split_inputs(realize_pairs)) {
          auto colon = item.find(':');
          if (colon == std::string::npos) throw UsageError("pair '" + item + "' is not input:output");
          trace.pairs.emplace_back(item.substr(0, colon), item.substr(colon + 1));
        }
      }
      auto pair = analysis::realize(trace);
      auto line = analysis::to_json(pair);
      line["pairs"] = trace.pairs.size();
      line["reproduces"] = analysis::reproduces(pair, trace);
      emit(line);
    } else if (*replay_cmd) {
      auto cert = analysis::certificate_from_json(json::parse(read_file(replay_path)));
      auto report = analysis::replay_certificate(cert);
      emit({{"status", report.verified ? "verified" : "rejected"}, {"failures", report.failures}});
      return report.verified ? 0 : 1;
    } else if (*serve_cmd) {
      const int port = serve_port.value_or(static_cast<int>(env_u64("EVOVERSE_PORT").value_or(8080)));
      const auto id_seed = seed ? seed : env_u64("EVOVERSE_SEED");
      service::SessionManager sessions(id_seed);
      emit({{"serving", serve_host + ":" + std::to_string(port)}});
      std::cout.flush();
      if (!service::serve(sessions, serve_host, port)) {
        return fail(1, "io", "could not listen on " + serve_host + ":" + std::to_string(port));
      }
    } else if (*snap_cmd) {
      auto world = load_world(snap_in);
      const auto scan = sim::procedures::scan();
      if (!snap_inputs.empty()) {
        for (const auto& x : bit_inputs(snap_inputs)) {
          uc::run(world, scan, x, sim::procedures::scan_budget(x.size()));
        }
      }
      json log = json::array();
      for (const auto& q : world.oracle_log()) log.push_back(pe::query_log_entry(q.input, q.outcome));
      emit({{"snapshot", json::parse(world.snapshot())}, {"query_log", log}});
      if (!snap_out.empty()) write_file(snap_out, world.snapshot());
    }
  } catch (const UsageError& e) {
    return fail(2, "usage", e.what());
  } catch (const pe::MalformedInput& e) {
    return fail(1, "malformed_input", e.what());
  } catch (const pe::SnapshotError& e) {
    return fail(1, "bad_snapshot", e.what());
  } catch (const analysis::FloodRefused& e) {
    std::cerr << json{{"error",
                       {{"code", "flood_refused"},
                        {"message", e.what()},
                        {"estimated_queries", e.estimated_queries()}}}}
                     .dump()
              << '\n';
    return 1;
  } catch (const json::exception& e) {
    return fail(1, "bad_json", e.what());
  } catch (const std::exception& e) {
    return fail(1, "domain", e.what());
  }
  return 0;
}
