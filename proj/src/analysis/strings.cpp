#include "evoverse/analysis/strings.hpp"

#include <stdexcept>

namespace evoverse::analysis {

std::vector<std::string> bit_strings(std::size_t n) {
  if (n >= 40) throw std::length_error("refusing to enumerate 2^" + std::to_string(n) + " strings");
  std::vector<std::string> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
    std::string s(n, '0');
    for (std::size_t b = 0; b < n; ++b) {
      if ((i >> (n - 1 - b)) & 1) s[b] = '1';
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::string> bit_strings_up_to(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t len = 0; len <= n; ++len) {
    auto layer = bit_strings(len);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace evoverse::analysis
