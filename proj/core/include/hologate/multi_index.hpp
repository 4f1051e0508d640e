#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace hologate {

// Exponent vector of a monomial, one entry per complex variable.
// The ambient dimension is the length of the vector.
using MultiIndex = std::vector<std::uint32_t>;

inline std::uint32_t total_degree(const MultiIndex& idx) {
  return std::accumulate(idx.begin(), idx.end(), std::uint32_t{0});
}

std::string index_to_string(const MultiIndex& idx);

}  // namespace hologate
