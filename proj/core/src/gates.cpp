#include "hologate/gates.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hologate/errors.hpp"

namespace hologate {

namespace {

MultiIndex unit(std::uint32_t d, std::uint32_t i) {
  MultiIndex out(d, 0);
  out[i] = 1;
  return out;
}

// z_{from+1} d_{to+1} with the given coefficient, zero-based indices.
std::tuple<MultiIndex, MultiIndex, Complex> hop(std::uint32_t d,
                                                std::uint32_t from,
                                                std::uint32_t to,
                                                Complex coeff = 1.0) {
  return {unit(d, from), unit(d, to), coeff};
}

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

double parse_angle(std::string_view text) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc{} || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw std::invalid_argument("rotation angle is not a finite number: " +
                                std::string(text));
  }
  return value;
}

}  // namespace

GateSpec parse_gate(std::string_view text) {
  const std::string name = lower(text);
  const auto colon = name.find(':');
  const std::string head = name.substr(0, colon);
  const std::string tail =
      colon == std::string::npos ? std::string() : name.substr(colon + 1);

  auto plain = [&](GateKind kind) {
    if (!tail.empty()) {
      throw std::invalid_argument("gate " + head + " takes no parameter");
    }
    return GateSpec{kind};
  };

  if (head == "x") return plain(GateKind::pauli_x);
  if (head == "y") return plain(GateKind::pauli_y);
  if (head == "z") return plain(GateKind::pauli_z);
  if (head == "h") return plain(GateKind::hadamard);
  if (head == "s") return plain(GateKind::phase_s);
  if (head == "cnot") return plain(GateKind::cnot);
  if (head == "swap") return plain(GateKind::swap);
  if (head == "toffoli") return plain(GateKind::toffoli);
  if (head == "fredkin") return plain(GateKind::fredkin);
  if (head == "i") {
    GateSpec spec{GateKind::identity};
    if (!tail.empty()) {
      unsigned dim = 0;
      auto [ptr, ec] =
          std::from_chars(tail.data(), tail.data() + tail.size(), dim);
      if (ec != std::errc{} || ptr != tail.data() + tail.size() || dim == 0) {
        throw std::invalid_argument("identity variable count must be a positive integer");
      }
      spec.identity_dimension = dim;
    }
    return spec;
  }
  if (head == "rx" || head == "ry" || head == "rz") {
    if (tail.empty()) {
      throw std::invalid_argument("rotation gate needs an angle, e.g. " +
                                  head + ":0.5");
    }
    GateSpec spec{head == "rx"   ? GateKind::rotation_x
                  : head == "ry" ? GateKind::rotation_y
                                 : GateKind::rotation_z};
    spec.angle = parse_angle(tail);
    return spec;
  }
  throw std::invalid_argument("unknown gate name: " + std::string(text));
}

std::string gate_label(const GateSpec& spec) {
  switch (spec.kind) {
    case GateKind::pauli_x: return "X";
    case GateKind::pauli_y: return "Y";
    case GateKind::pauli_z: return "Z";
    case GateKind::hadamard: return "H";
    case GateKind::phase_s: return "S";
    case GateKind::cnot: return "CNOT";
    case GateKind::swap: return "SWAP";
    case GateKind::toffoli: return "TOFFOLI";
    case GateKind::fredkin: return "FREDKIN";
    case GateKind::identity:
      return spec.identity_dimension == 2
                 ? "I"
                 : "I:" + std::to_string(spec.identity_dimension);
    case GateKind::rotation_x: return "Rx:" + format_double(spec.angle);
    case GateKind::rotation_y: return "Ry:" + format_double(spec.angle);
    case GateKind::rotation_z: return "Rz:" + format_double(spec.angle);
  }
  throw std::invalid_argument("unhandled gate kind");
}

DiffOp standard_gate(const GateSpec& spec) {
  using Terms = std::vector<std::tuple<MultiIndex, MultiIndex, Complex>>;
  const Complex i = kImaginaryUnit;
  switch (spec.kind) {
    case GateKind::pauli_x:
      return DiffOp::from_terms(2, Terms{hop(2, 0, 1), hop(2, 1, 0)});
    case GateKind::pauli_y:
      return DiffOp::from_terms(2, Terms{hop(2, 0, 1, -i), hop(2, 1, 0, i)});
    case GateKind::pauli_z:
      return DiffOp::from_terms(2, Terms{hop(2, 0, 0), hop(2, 1, 1, -1.0)});
    case GateKind::identity: {
      const std::uint32_t n = spec.identity_dimension;
      Terms terms;
      for (std::uint32_t k = 0; k < n; ++k) terms.push_back(hop(n, k, k));
      return DiffOp::from_terms(n, terms);
    }
    case GateKind::hadamard: {
      const double r = 1.0 / std::sqrt(2.0);
      return DiffOp::from_terms(
          2, Terms{hop(2, 0, 0, r), hop(2, 0, 1, r), hop(2, 1, 0, r),
                   hop(2, 1, 1, -r)});
    }
    case GateKind::phase_s:
      return DiffOp::from_terms(2, Terms{hop(2, 0, 0), hop(2, 1, 1, i)});
    case GateKind::rotation_x: {
      const double c = std::cos(spec.angle / 2.0);
      const double s = std::sin(spec.angle / 2.0);
      return DiffOp::from_terms(
          2, Terms{hop(2, 0, 0, c), hop(2, 0, 1, -i * s), hop(2, 1, 0, -i * s),
                   hop(2, 1, 1, c)});
    }
    case GateKind::rotation_y: {
      const double c = std::cos(spec.angle / 2.0);
      const double s = std::sin(spec.angle / 2.0);
      return DiffOp::from_terms(
          2, Terms{hop(2, 0, 0, c), hop(2, 0, 1, -s), hop(2, 1, 0, s),
                   hop(2, 1, 1, c)});
    }
    case GateKind::rotation_z:
      return DiffOp::from_terms(
          2, Terms{hop(2, 0, 0, std::exp(-i * (spec.angle / 2.0))),
                   hop(2, 1, 1, std::exp(i * (spec.angle / 2.0)))});
    case GateKind::cnot:
      return DiffOp::from_terms(
          4, Terms{hop(4, 0, 0), hop(4, 1, 1), hop(4, 2, 3), hop(4, 3, 2)});
    case GateKind::swap:
      return DiffOp::from_terms(
          4, Terms{hop(4, 0, 0), hop(4, 1, 2), hop(4, 2, 1), hop(4, 3, 3)});
    case GateKind::toffoli: {
      Terms terms;
      for (std::uint32_t k = 0; k < 6; ++k) terms.push_back(hop(8, k, k));
      terms.push_back(hop(8, 6, 7));
      terms.push_back(hop(8, 7, 6));
      return DiffOp::from_terms(8, terms);
    }
    case GateKind::fredkin: {
      Terms terms;
      for (std::uint32_t k : {0u, 1u, 2u, 3u, 5u, 7u}) {
        terms.push_back(hop(8, k, k));
      }
      terms.push_back(hop(8, 4, 6));
      terms.push_back(hop(8, 6, 4));
      return DiffOp::from_terms(8, terms);
    }
  }
  throw std::invalid_argument("unhandled gate kind");
}

DiffOp standard_gate(GateKind kind) { return standard_gate(GateSpec{kind}); }

DiffOp matrix_to_operator(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw dimension_error("operator conversion needs a square matrix");
  }
  const auto d = static_cast<std::uint32_t>(m.rows());
  std::vector<std::tuple<MultiIndex, MultiIndex, Complex>> terms;
  for (std::uint32_t j = 0; j < d; ++j) {
    for (std::uint32_t k = 0; k < d; ++k) {
      const Complex c = m(j, k);
      if (c != Complex{0.0, 0.0}) terms.push_back(hop(d, j, k, c));
    }
  }
  return DiffOp::from_terms(d, terms);
}

Complex expectation(const BargmannSpace& space, const DiffOp& op,
                    const HoloPoly& f, ExpectationMode mode) {
  if (f.is_zero()) {
    throw zero_state_error("expectation value of the zero state");
  }
  const Complex numerator = inner_product(space, f, op.apply(f));
  const double norm2 = inner_product(space, f, f).real();
  switch (mode) {
    case ExpectationMode::normalized:
      return numerator / norm2;
    case ExpectationMode::square_root:
      return numerator / std::sqrt(norm2);
  }
  throw std::invalid_argument("unhandled expectation mode");
}

DiffOp jordan_schwinger(SpinComponent component) {
  switch (component) {
    case SpinComponent::x:
      return standard_gate(GateKind::pauli_x);
    case SpinComponent::y:
      return standard_gate(GateKind::pauli_y);
    case SpinComponent::z:
      return standard_gate(GateKind::pauli_z);
    case SpinComponent::squared_total: {
      DiffOp total(2);
      for (SpinComponent c :
           {SpinComponent::x, SpinComponent::y, SpinComponent::z}) {
        const DiffOp half = scaled(jordan_schwinger(c), 0.5);
        total = add(total, compose(half, half));
      }
      return total;
    }
  }
  throw std::invalid_argument("unhandled spin component");
}

DiffOp oscillator_hamiltonian() {
  return DiffOp::from_terms(1, {{{1}, {1}, Complex{1.0}},
                                {{0}, {0}, Complex{0.5}}});
}

HoloPoly derivative_via_contour(const HoloPoly& f, std::uint32_t variable,
                                double radius, std::size_t nodes) {
  if (variable >= f.dimension()) {
    throw dimension_error("contour derivative variable out of range");
  }
  if (!(radius > 0.0)) {
    throw std::invalid_argument("contour radius must be positive");
  }
  if (nodes < 16) {
    throw std::invalid_argument("contour quadrature needs at least 16 nodes");
  }
  if (nodes < 2 * (static_cast<std::size_t>(f.max_degree()) + 2)) {
    throw aliasing_error("contour node count " + std::to_string(nodes) +
                         " cannot resolve degree " +
                         std::to_string(f.max_degree()));
  }

  const std::uint32_t d = f.dimension();
  const std::uint32_t D = f.max_degree();
  const std::size_t lattice = D + 1;  // evaluation points per variable

  // Derivative values on the roots-of-unity lattice via the squared-pole
  // contour integral around each lattice point.
  std::size_t total = 1;
  for (std::uint32_t i = 0; i < d; ++i) total *= lattice;
  std::vector<Complex> values(total);
  std::vector<Complex> point(d);
  std::vector<std::size_t> digit(d, 0);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(lattice);
  for (std::size_t flat = 0; flat < total; ++flat) {
    for (std::uint32_t i = 0; i < d; ++i) {
      point[i] = std::polar(1.0, step * static_cast<double>(digit[i]));
    }
    Complex sum{0.0, 0.0};
    const Complex center = point[variable];
    for (std::size_t m = 0; m < nodes; ++m) {
      const double theta =
          2.0 * std::numbers::pi * static_cast<double>(m) /
          static_cast<double>(nodes);
      point[variable] = center + std::polar(radius, theta);
      sum += f.evaluate(point) * std::polar(1.0, -theta);
    }
    point[variable] = center;
    values[flat] = sum / (static_cast<double>(nodes) * radius);

    std::uint32_t pos = 0;
    while (pos < d && digit[pos] + 1 == lattice) {
      digit[pos] = 0;
      ++pos;
    }
    if (pos < d) ++digit[pos];
  }

  // Tensor inverse discrete Fourier transform recovers the coefficients.
  std::vector<std::pair<MultiIndex, Complex>> entries;
  MultiIndex alpha(d, 0);
  for (std::size_t out_flat = 0; out_flat < total; ++out_flat) {
    if (total_degree(alpha) <= D) {
      Complex coeff{0.0, 0.0};
      std::fill(digit.begin(), digit.end(), 0);
      for (std::size_t flat = 0; flat < total; ++flat) {
        double phase = 0.0;
        for (std::uint32_t i = 0; i < d; ++i) {
          phase -= step * static_cast<double>(digit[i] * alpha[i]);
        }
        coeff += values[flat] * std::polar(1.0, phase);

        std::uint32_t pos = 0;
        while (pos < d && digit[pos] + 1 == lattice) {
          digit[pos] = 0;
          ++pos;
        }
        if (pos < d) ++digit[pos];
      }
      coeff /= static_cast<double>(total);
      if (std::abs(coeff) > 1e-10) entries.emplace_back(alpha, coeff);
    }
    std::uint32_t pos = 0;
    while (pos < d && alpha[pos] + 1 == lattice) {
      alpha[pos] = 0;
      ++pos;
    }
    if (pos < d) ++alpha[pos];
  }
  return HoloPoly::from_terms(d, D, entries);
}

HoloPoly apply_via_cauchy(const DiffOp& op, const HoloPoly& f, double radius,
                          std::size_t nodes) {
  if (op.dimension() != f.dimension()) {
    throw dimension_error("operator and state dimensions differ");
  }
  if (!op.is_first_order()) {
    throw std::invalid_argument(
        "contour application is defined for first-order operators only");
  }

  std::vector<HoloPoly> derivative;
  std::vector<bool> have(f.dimension(), false);
  derivative.reserve(f.dimension());
  for (std::uint32_t i = 0; i < f.dimension(); ++i) {
    derivative.emplace_back(f.dimension(), f.max_degree());
  }

  HoloPoly out(f.dimension(), f.max_degree());
  for (const auto& [key, c] : op.terms()) {
    const auto to = static_cast<std::uint32_t>(
        std::find(key.annihilation.begin(), key.annihilation.end(), 1u) -
        key.annihilation.begin());
    const auto from = static_cast<std::uint32_t>(
        std::find(key.creation.begin(), key.creation.end(), 1u) -
        key.creation.begin());
    if (!have[to]) {
      derivative[to] = derivative_via_contour(f, to, radius, nodes);
      have[to] = true;
    }
    out = add(out, derivative[to].multiply_by_variable(from).scaled(c));
  }
  return out;
}

}  // namespace hologate
