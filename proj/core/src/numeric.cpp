#include "hologate/numeric.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hologate/multi_index.hpp"

namespace hologate {

double factorial(std::uint32_t n) {
  double out = 1.0;
  for (std::uint32_t k = 2; k <= n; ++k) out *= static_cast<double>(k);
  return out;
}

double falling_factorial(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0.0;
  double out = 1.0;
  for (std::uint32_t j = 0; j < k; ++j) out *= static_cast<double>(n - j);
  return out;
}

double binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0.0;
  if (k > n - k) k = n - k;
  double out = 1.0;
  for (std::uint32_t j = 1; j <= k; ++j) {
    out = out * static_cast<double>(n - k + j) / static_cast<double>(j);
  }
  return std::round(out);
}

double pochhammer(double x, std::uint32_t n) {
  double out = 1.0;
  for (std::uint32_t j = 0; j < n; ++j) out *= x + static_cast<double>(j);
  return out;
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

std::string index_to_string(const MultiIndex& idx) {
  std::string out = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(idx[i]);
  }
  out += ")";
  return out;
}

}  // namespace hologate
