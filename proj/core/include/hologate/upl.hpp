#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hologate/bargmann.hpp"
#include "hologate/diff_op.hpp"
#include "hologate/gates.hpp"
#include "hologate/holo_poly.hpp"

namespace hologate {

/**
 * One named constituent of a program's physical system. Either the
 * holomorphic state is given directly in the variables of the computation
 * space, or a sampled real-line profile is given and gets lifted onto a
 * single designated variable, expanded up to lift_degree.
 */
struct SubsystemSource {
  std::string name;
  std::optional<HoloPoly> state;
  std::optional<RealLineSamples> samples;
  std::uint32_t variable = 0;
  std::uint32_t lift_degree = 8;
};

struct LabeledGate {
  std::string label;
  DiffOp op;
};

LabeledGate labeled_gate(const GateSpec& spec);

/**
 * A program is the triple of a computation space, the subsystem state
 * sources living in it, and the operator set to sweep, plus the number of
 * time steps to iterate. Execution follows the eight-instruction pipeline:
 * resolve the state functions, lift sampled sources, form the joint state,
 * apply every operator, classify the resulting patterns, take expectation
 * values, iterate, and deduplicate into a catalog.
 */
struct UplProgram {
  BargmannSpace computation_space;
  std::vector<SubsystemSource> subsystems;
  std::vector<LabeledGate> gate_set;
  std::size_t iterations = 1;
};

enum class Classification { classical, quantum };

struct PatternRecord {
  std::string gate;
  HoloPoly input;
  HoloPoly output;
  Complex expectation;
  Classification classification;
};

// Disjoint variable groups covering every variable of a state, one group
// per subsystem.
using SubsystemPartition = std::vector<std::vector<std::uint32_t>>;

// A state is classical when it factors across the partition into factors
// that each occupy a single component, quantum when it is entangled across
// the groups or any factor is a superposition.
Classification classify_state(const HoloPoly& f,
                              const SubsystemPartition& partition);

// Instructions 1 and 2: the subsystem's state in the computation space,
// lifting a sampled source through the holomorphic transform.
HoloPoly resolve_subsystem(const BargmannSpace& space,
                           const SubsystemSource& source);

// Instruction 3: the product of all resolved subsystem states.
HoloPoly joint_state(const UplProgram& program);

// Runs the full pipeline. The catalog is sorted by gate label and holds one
// record per distinct (label, expectation) pair, expectations compared to
// 1e-10.
std::vector<PatternRecord> run_upl(const UplProgram& program);

// One computation stage bound to a time scale. Layers compose in strictly
// increasing time order; each layer receives the previous layer's catalog
// in its inbox before it starts.
struct Layer {
  std::size_t index;
  double time_scale;
  UplProgram program;
  std::vector<PatternRecord> inbox;
};

struct TraceEntry {
  std::size_t layer_index;
  std::uint64_t start_tick;
  std::uint64_t end_tick;
  std::size_t catalog_size;
};

struct ScheduleResult {
  std::vector<TraceEntry> trace;
  std::vector<Layer> layers;
  std::vector<std::vector<PatternRecord>> catalogs;
};

// Executes the layers in order on one logical clock. Every operator
// application advances one tick, so the trace intervals of consecutive
// layers never overlap: end_tick(i) < start_tick(i+1).
ScheduleResult schedule_layers(std::vector<Layer> layers);

}  // namespace hologate
