#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace evoverse::analysis {

// A polynomial in n with non-negative integer coefficients, written like
// "n^2", "2n", "3*n^2 + n + 1" or "7". Used for step budgets f and for
// witness-length bounds q. Evaluation saturates at UINT64_MAX.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::uint64_t> coefficients);

  // Throws std::invalid_argument on anything that is not a sum of terms.
  static Polynomial parse(std::string_view text);

  std::uint64_t operator()(std::uint64_t n) const;

  // coefficients()[i] multiplies n^i.
  const std::vector<std::uint64_t>& coefficients() const { return coefficients_; }
  std::size_t degree() const { return coefficients_.empty() ? 0 : coefficients_.size() - 1; }
  std::string text() const;

  // Smallest t with f(n) < 2^n for every n > t, checked numerically up to
  // n = 62. Empty when f is still at or above 2^62 there, or when the degree is
  // too high for the check at 62 to settle larger n.
  std::optional<std::uint64_t> subexponential_threshold() const;

 private:
  std::vector<std::uint64_t> coefficients_;
};

}  // namespace evoverse::analysis
