#include "evoverse/analysis/polynomial.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace evoverse::analysis {

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) { return b > kMax - a ? kMax : a + b; }

std::uint64_t read_number(std::string_view s, std::size_t& i) {
  std::uint64_t v = 0;
  const std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    const std::uint64_t digit = static_cast<std::uint64_t>(s[i] - '0');
    if (v > (kMax - digit) / 10) throw std::invalid_argument("coefficient too large");
    v = v * 10 + digit;
    ++i;
  }
  if (i == start) throw std::invalid_argument("expected a number at offset " + std::to_string(start));
  return v;
}

}  // namespace

Polynomial::Polynomial(std::vector<std::uint64_t> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Polynomial Polynomial::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty polynomial");

  std::vector<std::uint64_t> coeffs;
  std::size_t i = 0;
  while (true) {
    std::uint64_t coef = 1;
    bool has_coef = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coef = read_number(s, i);
      has_coef = true;
    }
    std::size_t power = 0;
    if (i < s.size() && s[i] == '*') {
      if (!has_coef) throw std::invalid_argument("'*' without a coefficient");
      ++i;
      if (i >= s.size() || s[i] != 'n') throw std::invalid_argument("expected n after '*'");
    }
    if (i < s.size() && s[i] == 'n') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        power = static_cast<std::size_t>(read_number(s, i));
        if (power > 64) throw std::invalid_argument("exponent too large");
      }
    } else if (!has_coef) {
      throw std::invalid_argument("unexpected '" + std::string(1, i < s.size() ? s[i] : '?') +
                                  "' in polynomial '" + s + "'");
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1, 0);
    coeffs[power] = saturating_add(coeffs[power], coef);
    if (i == s.size()) break;
    if (s[i] != '+') {
      throw std::invalid_argument("unexpected '" + std::string(1, s[i]) + "' in polynomial '" + s +
                                  "'");
    }
    ++i;
  }
  return Polynomial(std::move(coeffs));
}

std::uint64_t Polynomial::operator()(std::uint64_t n) const {
  std::uint64_t acc = 0;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    acc = saturating_add(saturating_mul(acc, n), coefficients_[i]);
  }
  return acc;
}

std::string Polynomial::text() const {
  std::string out;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    const auto c = coefficients_[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c != 1) out += std::to_string(c);
    if (i >= 1) out += "n";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::optional<std::uint64_t> Polynomial::subexponential_threshold() const {
  // Past n = 62, f(n+1)/f(n) <= (1 + 1/62)^d < 2 for d <= 40, so the gap to
  // 2^n only widens.
  if (degree() > 40) return std::nullopt;
  std::uint64_t t = 0;
  for (std::uint64_t n = 0; n <= 62; ++n) {
    if ((*this)(n) >= (std::uint64_t{1} << n)) t = n;
  }
  if (t == 62) return std::nullopt;
  return t;
}

}  // namespace evoverse::analysis
