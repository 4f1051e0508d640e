#pragma once

#include <complex>
#include <cstdint>
#include <string>

namespace hologate {

using Complex = std::complex<double>;

inline constexpr Complex kImaginaryUnit{0.0, 1.0};

// n! as a double. Exact for n <= 18; callers stay far below that in practice.
double factorial(std::uint32_t n);

// n (n-1) ... (n-k+1); zero when k > n.
double falling_factorial(std::uint32_t n, std::uint32_t k);

double binomial(std::uint32_t n, std::uint32_t k);

// Rising factorial x (x+1) ... (x+n-1), with the empty product equal to 1.
double pochhammer(double x, std::uint32_t n);

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

}  // namespace hologate
