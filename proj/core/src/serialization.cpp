#include "hologate/serialization.hpp"

#include <algorithm>
#include <stdexcept>

#include "hologate/errors.hpp"
#include <utility>

namespace hologate {

std::string format_complex(Complex value) {
  const double re = value.real();
  const double im = value.imag();
  if (im == 0.0) return format_double(re);
  std::string imaginary;
  if (im == 1.0) {
    imaginary = "i";
  } else if (im == -1.0) {
    imaginary = "-i";
  } else {
    imaginary = format_double(im) + "i";
  }
  if (re == 0.0) return imaginary;
  return format_double(re) + (im > 0.0 ? "+" : "") + imaginary;
}

Json space_to_json(const BargmannSpace& space) {
  return Json{{"dim", space.dimension}, {"t", space.t}};
}

BargmannSpace space_from_json(const Json& source) {
  return BargmannSpace(source.at("dim").get<std::uint32_t>(),
                       source.at("t").get<double>());
}

Json poly_to_json(const HoloPoly& f) {
  Json out;
  out["dim"] = f.dimension();
  out["max_degree"] = f.max_degree();
  Json terms = Json::array();
  for (const auto& [index, coeff] : f.terms()) {
    terms.push_back(Json{{"idx", index},
                         {"re", coeff.real()},
                         {"im", coeff.imag()}});
  }
  out["terms"] = std::move(terms);
  return out;
}

HoloPoly poly_from_json(const Json& source) {
  const auto dim = source.at("dim").get<std::uint32_t>();
  std::vector<std::pair<MultiIndex, Complex>> entries;
  std::uint32_t highest = 0;
  if (source.contains("terms")) {
    for (const Json& term : source.at("terms")) {
      MultiIndex index = term.at("idx").get<MultiIndex>();
      if (index.size() != dim) {
        throw dimension_error("term index has " +
                              std::to_string(index.size()) +
                              " entries in a dimension-" +
                              std::to_string(dim) + " state");
      }
      highest = std::max(highest, total_degree(index));
      entries.emplace_back(std::move(index),
                           Complex{term.value("re", 0.0),
                                   term.value("im", 0.0)});
    }
  }
  const auto max_degree =
      source.contains("max_degree")
          ? source.at("max_degree").get<std::uint32_t>()
          : highest;
  return HoloPoly::from_terms(dim, max_degree, entries);
}

namespace {

Json complex_to_json(Complex value) {
  return Json{{"re", value.real()}, {"im", value.imag()}};
}

const char* classification_name(Classification kind) {
  return kind == Classification::classical ? "classical" : "quantum";
}

Json samples_to_json(const RealLineSamples& samples) {
  Json values = Json::array();
  for (Complex v : samples.values) {
    values.push_back(Json::array({v.real(), v.imag()}));
  }
  return Json{{"points", samples.points},
              {"weights", samples.weights},
              {"values", std::move(values)}};
}

RealLineSamples samples_from_json(const Json& source) {
  RealLineSamples samples;
  samples.points = source.at("points").get<std::vector<double>>();
  samples.weights = source.at("weights").get<std::vector<double>>();
  for (const Json& value : source.at("values")) {
    samples.values.push_back(Complex{value.at(0).get<double>(),
                                     value.at(1).get<double>()});
  }
  if (samples.points.size() != samples.weights.size() ||
      samples.points.size() != samples.values.size()) {
    throw std::invalid_argument(
        "sampled profile needs points, weights, and values of equal length");
  }
  return samples;
}

}  // namespace

Json record_to_json(const PatternRecord& record) {
  return Json{{"gate", record.gate},
              {"input", poly_to_json(record.input)},
              {"output", poly_to_json(record.output)},
              {"expectation", complex_to_json(record.expectation)},
              {"classification", classification_name(record.classification)}};
}

Json catalog_to_json(const std::vector<PatternRecord>& catalog) {
  Json out = Json::array();
  for (const PatternRecord& record : catalog) {
    out.push_back(record_to_json(record));
  }
  return out;
}

Json program_to_json(const UplProgram& program) {
  Json subsystems = Json::array();
  for (const SubsystemSource& source : program.subsystems) {
    Json entry{{"name", source.name}};
    if (source.state) {
      entry["state"] = poly_to_json(*source.state);
    }
    if (source.samples) {
      entry["samples"] = samples_to_json(*source.samples);
      entry["variable"] = source.variable;
      entry["lift_degree"] = source.lift_degree;
    }
    subsystems.push_back(std::move(entry));
  }
  Json gates = Json::array();
  for (const LabeledGate& gate : program.gate_set) {
    gates.push_back(gate.label);
  }
  return Json{{"space", space_to_json(program.computation_space)},
              {"subsystems", std::move(subsystems)},
              {"gates", std::move(gates)},
              {"iterations", program.iterations}};
}

UplProgram program_from_json(const Json& source) {
  UplProgram program{space_from_json(source.at("space")),
                     {},
                     {},
                     source.value("iterations", std::size_t{1})};
  for (const Json& entry : source.at("subsystems")) {
    SubsystemSource subsystem;
    subsystem.name = entry.at("name").get<std::string>();
    if (entry.contains("state")) {
      subsystem.state = poly_from_json(entry.at("state"));
    }
    if (entry.contains("samples")) {
      subsystem.samples = samples_from_json(entry.at("samples"));
      subsystem.variable = entry.value("variable", std::uint32_t{0});
      subsystem.lift_degree = entry.value("lift_degree", std::uint32_t{8});
    }
    program.subsystems.push_back(std::move(subsystem));
  }
  for (const Json& gate : source.at("gates")) {
    program.gate_set.push_back(labeled_gate(parse_gate(
        gate.get<std::string>())));
  }
  return program;
}

Json schedule_to_json(const std::vector<Layer>& layers) {
  Json out = Json::array();
  for (const Layer& layer : layers) {
    out.push_back(Json{{"index", layer.index},
                       {"time_scale", layer.time_scale},
                       {"program", program_to_json(layer.program)}});
  }
  return Json{{"layers", std::move(out)}};
}

std::vector<Layer> schedule_from_json(const Json& source) {
  std::vector<Layer> layers;
  for (const Json& entry : source.at("layers")) {
    layers.push_back(Layer{entry.at("index").get<std::size_t>(),
                           entry.at("time_scale").get<double>(),
                           program_from_json(entry.at("program")),
                           {}});
  }
  return layers;
}

Json trace_to_json(const std::vector<TraceEntry>& trace) {
  Json out = Json::array();
  for (const TraceEntry& entry : trace) {
    out.push_back(Json{{"layer", entry.layer_index},
                       {"start_tick", entry.start_tick},
                       {"end_tick", entry.end_tick},
                       {"catalog_size", entry.catalog_size}});
  }
  return out;
}

}  // namespace hologate
