#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hologate {

// Mismatched dimensions, lengths, variable indices or partitions.
struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A term would exceed the degree bound of the polynomial that owns it.
// Carries the offending multi-index.
struct degree_overflow_error : std::domain_error {
  degree_overflow_error(const std::string& msg, std::vector<std::uint32_t> idx)
      : std::domain_error(msg), index(std::move(idx)) {}
  std::vector<std::uint32_t> index;
};

// An operation that is undefined on the zero state (or an all-zero ensemble).
struct zero_state_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Relative entropy requested for distributions violating absolute continuity.
struct support_error : std::domain_error {
  using std::domain_error::domain_error;
};

// A lower Pochhammer factor vanishes, so the coefficient ratio has a pole.
struct pole_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Two independent evaluation routes disagreed beyond their contract.
struct reconciliation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Too few contour nodes to reconstruct the polynomial without aliasing.
struct aliasing_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A sample rule whose endpoints do not cover the Gaussian envelope.
struct envelope_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A simulation produced a non-finite state. Carries the step index.
struct divergence_error : std::runtime_error {
  divergence_error(const std::string& msg, std::size_t at_step)
      : std::runtime_error(msg), step(at_step) {}
  std::size_t step;
};

// Violated stability requirements (explicit time step bound, indefinite
// frequency matrix).
struct stability_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Layer time scales that are not strictly increasing.
struct schedule_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A neuron input expectation with an imaginary part beyond tolerance.
struct complex_input_error : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace hologate
