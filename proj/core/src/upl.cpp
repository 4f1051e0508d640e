#include "hologate/upl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hologate/errors.hpp"

namespace hologate {

namespace {

constexpr double kExpectationMatchTol = 1e-10;

void validate_partition(std::uint32_t dimension,
                        const SubsystemPartition& partition) {
  if (partition.empty()) {
    throw dimension_error("partition needs at least one variable group");
  }
  std::vector<bool> seen(dimension, false);
  for (const auto& group : partition) {
    if (group.empty()) {
      throw dimension_error("partition groups must be nonempty");
    }
    for (std::uint32_t var : group) {
      if (var >= dimension) {
        throw dimension_error("partition names variable " +
                              std::to_string(var + 1) + " beyond dimension " +
                              std::to_string(dimension));
      }
      if (seen[var]) {
        throw dimension_error("partition repeats variable " +
                              std::to_string(var + 1));
      }
      seen[var] = true;
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    throw dimension_error("partition must cover every variable");
  }
}

std::size_t significant_terms(const HoloPoly& f) {
  const double floor = kCoeffTol * f.max_coefficient_magnitude();
  std::size_t count = 0;
  for (const auto& [index, coeff] : f.terms()) {
    if (std::abs(coeff) > floor) ++count;
  }
  return count;
}

}  // namespace

LabeledGate labeled_gate(const GateSpec& spec) {
  return {gate_label(spec), standard_gate(spec)};
}

Classification classify_state(const HoloPoly& f,
                              const SubsystemPartition& partition) {
  validate_partition(f.dimension(), partition);
  if (f.terms().empty()) {
    throw zero_state_error("the zero state has no classification");
  }
  // A state factors across the partition into single-component pieces
  // exactly when it consists of one monomial. With two or more monomials,
  // either some bipartition of the groups is entangled or some factor
  // carries at least two occupation components; both read as quantum.
  return significant_terms(f) <= 1 ? Classification::classical
                                   : Classification::quantum;
}

HoloPoly resolve_subsystem(const BargmannSpace& space,
                           const SubsystemSource& source) {
  if (source.state.has_value() == source.samples.has_value()) {
    throw std::invalid_argument(
        "instruction 1: subsystem '" + source.name +
        "' must carry exactly one of a direct state or a sampled profile");
  }
  if (source.state) {
    if (source.state->dimension() != space.dimension) {
      throw dimension_error(
          "instruction 1: subsystem '" + source.name + "' has dimension " +
          std::to_string(source.state->dimension()) +
          " but the computation space has dimension " +
          std::to_string(space.dimension));
    }
    return *source.state;
  }

  if (source.variable >= space.dimension) {
    throw dimension_error("instruction 2: subsystem '" + source.name +
                          "' targets variable " +
                          std::to_string(source.variable + 1) +
                          " beyond dimension " +
                          std::to_string(space.dimension));
  }

  // The lifted profile is entire, so its expansion coefficients come from
  // uniform samples on the unit circle through a discrete Fourier sum.
  const BargmannSpace line(1, space.t);
  const std::uint32_t degree = source.lift_degree;
  const std::size_t nodes =
      std::max<std::size_t>(16, 4 * (static_cast<std::size_t>(degree) + 1));
  std::vector<Complex> ring(nodes);
  for (std::size_t m = 0; m < nodes; ++m) {
    const double theta =
        2.0 * std::numbers::pi * static_cast<double>(m) /
        static_cast<double>(nodes);
    ring[m] = sb_transform(line, *source.samples,
                           std::exp(Complex{0.0, theta}));
  }
  std::vector<std::pair<MultiIndex, Complex>> entries;
  for (std::uint32_t n = 0; n <= degree; ++n) {
    Complex sum = 0.0;
    for (std::size_t m = 0; m < nodes; ++m) {
      const double theta =
          2.0 * std::numbers::pi * static_cast<double>(m * n) /
          static_cast<double>(nodes);
      sum += ring[m] * std::exp(Complex{0.0, -theta});
    }
    const Complex coeff = sum / static_cast<double>(nodes);
    if (std::abs(coeff) > 1e-10) {
      entries.push_back({{n}, coeff});
    }
  }
  const HoloPoly on_line = HoloPoly::from_terms(1, degree, entries);
  return embed(on_line, space.dimension, {source.variable});
}

HoloPoly joint_state(const UplProgram& program) {
  if (program.subsystems.empty()) {
    throw std::invalid_argument(
        "instruction 1: a program needs at least one subsystem");
  }
  HoloPoly joint =
      resolve_subsystem(program.computation_space, program.subsystems[0]);
  for (std::size_t i = 1; i < program.subsystems.size(); ++i) {
    joint = multiply(joint, resolve_subsystem(program.computation_space,
                                              program.subsystems[i]));
  }
  return joint;
}

std::vector<PatternRecord> run_upl(const UplProgram& program) {
  if (program.iterations == 0) {
    throw std::invalid_argument("a program needs at least one iteration");
  }
  for (const LabeledGate& gate : program.gate_set) {
    if (gate.op.dimension() != program.computation_space.dimension) {
      throw dimension_error(
          "instruction 4: gate " + gate.label + " acts on dimension " +
          std::to_string(gate.op.dimension()) +
          " but the computation space has dimension " +
          std::to_string(program.computation_space.dimension));
    }
  }

  const HoloPoly input = joint_state(program);
  if (input.terms().empty()) {
    throw zero_state_error("instruction 3: the joint state vanishes");
  }
  std::vector<std::uint32_t> all_vars(program.computation_space.dimension);
  for (std::uint32_t i = 0; i < all_vars.size(); ++i) all_vars[i] = i;
  const SubsystemPartition whole{all_vars};

  std::vector<PatternRecord> catalog;
  for (std::size_t iter = 0; iter < program.iterations; ++iter) {
    for (const LabeledGate& gate : program.gate_set) {
      HoloPoly output = gate.op.apply(input);
      const Complex value =
          expectation(program.computation_space, gate.op, input);
      const bool duplicate =
          std::any_of(catalog.begin(), catalog.end(),
                      [&](const PatternRecord& record) {
                        return record.gate == gate.label &&
                               std::abs(record.expectation - value) <=
                                   kExpectationMatchTol;
                      });
      if (duplicate) continue;
      const Classification kind = output.terms().empty()
                                      ? Classification::classical
                                      : classify_state(output, whole);
      catalog.push_back(
          {gate.label, input, std::move(output), value, kind});
    }
  }
  std::sort(catalog.begin(), catalog.end(),
            [](const PatternRecord& a, const PatternRecord& b) {
              if (a.gate != b.gate) return a.gate < b.gate;
              if (a.expectation.real() != b.expectation.real()) {
                return a.expectation.real() < b.expectation.real();
              }
              return a.expectation.imag() < b.expectation.imag();
            });
  return catalog;
}

ScheduleResult schedule_layers(std::vector<Layer> layers) {
  for (std::size_t i = 1; i < layers.size(); ++i) {
    if (!(layers[i - 1].time_scale < layers[i].time_scale)) {
      throw schedule_error(
          "layer time scales must increase strictly: layer " +
          std::to_string(layers[i - 1].index) + " runs at " +
          format_double(layers[i - 1].time_scale) + ", layer " +
          std::to_string(layers[i].index) + " at " +
          format_double(layers[i].time_scale));
    }
  }

  ScheduleResult result;
  result.trace.reserve(layers.size());
  result.catalogs.reserve(layers.size());
  std::uint64_t clock = 0;
  std::vector<PatternRecord> previous;
  for (Layer& layer : layers) {
    layer.inbox = std::move(previous);
    const std::uint64_t start = ++clock;
    std::vector<PatternRecord> catalog = run_upl(layer.program);
    const std::uint64_t applications =
        static_cast<std::uint64_t>(layer.program.iterations) *
        layer.program.gate_set.size();
    if (applications > 1) clock += applications - 1;
    result.trace.push_back({layer.index, start, clock, catalog.size()});
    previous = catalog;
    result.catalogs.push_back(std::move(catalog));
  }
  for (std::size_t i = 1; i < result.trace.size(); ++i) {
    if (result.trace[i - 1].end_tick >= result.trace[i].start_tick) {
      throw std::logic_error("layer trace intervals overlap");
    }
  }
  result.layers = std::move(layers);
  return result;
}

}  // namespace hologate
