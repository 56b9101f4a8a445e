#include "evoverse/analysis/witness.hpp"

#include "evoverse/analysis/strings.hpp"
#include "evoverse/pe/automaton.hpp"
#include "evoverse/sim/procedures.hpp"

namespace evoverse::analysis {

bool np_witness_check(const uc::UniverseComputer& world, const uc::Procedure& j,
                      const Polynomial& q, std::string_view x, std::string_view y) {
  pe::require_bits(x);
  pe::require_bits(y);
  if (y.size() > q(x.size())) {
    throw PairingOverflow("witness of length " + std::to_string(y.size()) + " exceeds q(" +
                          std::to_string(x.size()) + ") = " + std::to_string(q(x.size())));
  }
  const auto encoded = sim::procedures::encode_pair(x, y);
  auto scratch = world.branch();
  auto path = uc::run(*scratch, j, encoded, sim::procedures::pair_budget(encoded.size()));
  if (path.outcome == uc::Outcome::BudgetExhausted) {
    throw VerifierExhausted("verifier exceeded " +
                            std::to_string(sim::procedures::pair_budget(encoded.size())) +
                            " steps on " + encoded);
  }
  return path.accepted();
}

std::optional<std::string> find_witness(const uc::UniverseComputer& world, const uc::Procedure& j,
                                        const Polynomial& q, std::string_view x,
                                        std::size_t witness_length) {
  for (const auto& y : bit_strings(witness_length)) {
    if (np_witness_check(world, j, q, x, y)) return y;
  }
  return std::nullopt;
}

}  // namespace evoverse::analysis
