#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "evoverse/analysis/polynomial.hpp"
#include "evoverse/uc/executor.hpp"

namespace evoverse::analysis {

// |y| > q(|x|): the pair is outside the relation's declared witness bound.
class PairingOverflow : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The verifier ran out of steps on the encoded pair.
class VerifierExhausted : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Decides (x, y) in J by running J on encode_pair(x, y) (1^|x| 0 x y) on a
// branch of world with budget pair_budget. The world is not touched.
bool np_witness_check(const uc::UniverseComputer& world, const uc::Procedure& j,
                      const Polynomial& q, std::string_view x, std::string_view y);

// First y of length exactly witness_length (lexicographic) with (x, y) in J,
// each candidate checked on its own branch.
std::optional<std::string> find_witness(const uc::UniverseComputer& world, const uc::Procedure& j,
                                        const Polynomial& q, std::string_view x,
                                        std::size_t witness_length);

}  // namespace evoverse::analysis
