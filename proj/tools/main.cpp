#include <cmath>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/Core>

#include "hologate/bargmann.hpp"
#include "hologate/gates.hpp"
#include "hologate/numeric.hpp"
#include "hologate/info_theory.hpp"
#include "hologate/serialization.hpp"
#include "hologate/systems.hpp"
#include "hologate/upl.hpp"

namespace {

using hologate::BargmannSpace;
using hologate::Complex;
using hologate::HoloPoly;
using hologate::Json;

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << text;
}

std::string csv(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    out << (i ? "," : "") << header[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << row[i];
    }
    out << '\n';
  }
  return out.str();
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return Json::parse(in);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      if (!current.empty()) parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) parts.push_back(current);
  return parts;
}

std::string fmt(double value) { return hologate::format_double(value); }

struct GatesTableArgs {
  std::string state_text;
  std::string gates;
  double t = 1.0;
  std::string format = "csv";
  std::string out;
};

void run_gates_table(const GatesTableArgs& args) {
  const HoloPoly state = hologate::poly_from_json(Json::parse(args.state_text));
  const BargmannSpace space(state.dimension(), args.t);
  std::vector<std::vector<std::string>> rows;
  Json entries = Json::array();
  for (const std::string& name : split_list(args.gates)) {
    const hologate::GateSpec spec = hologate::parse_gate(name);
    const hologate::DiffOp op = hologate::standard_gate(spec);
    const HoloPoly image = op.apply(state);
    const Complex value = hologate::expectation(space, op, state);
    rows.push_back({hologate::gate_label(spec), hologate::to_string(image),
                    hologate::format_complex(value)});
    entries.push_back(Json{{"gate", hologate::gate_label(spec)},
                           {"image", hologate::poly_to_json(image)},
                           {"expectation",
                            Json{{"re", value.real()}, {"im", value.imag()}}}});
  }
  if (args.format == "json") {
    emit(entries.dump(), args.out);
  } else {
    emit(csv({"gate", "image", "expectation"}, rows), args.out);
  }
}

struct BargmannCheckArgs {
  std::string format = "csv";
  std::string out;
};

void run_bargmann_check(const BargmannCheckArgs& args) {
  std::vector<std::vector<std::string>> rows;
  Json entries = Json::array();
  bool all_ok = true;
  auto push = [&](const std::string& name, Complex exact, Complex quad) {
    const double rel = std::abs(quad - exact) / std::abs(exact);
    all_ok = all_ok && rel < 1e-7;
    rows.push_back({name, fmt(exact.real()), fmt(exact.imag()),
                    fmt(quad.real()), fmt(quad.imag()), fmt(rel)});
    entries.push_back(Json{{"test", name},
                           {"exact", Json{{"re", exact.real()},
                                          {"im", exact.imag()}}},
                           {"quad", Json{{"re", quad.real()},
                                         {"im", quad.imag()}}},
                           {"rel_err", rel}});
  };

  for (double t : {0.5, 1.0, 2.0}) {
    const BargmannSpace space(1, t);
    const auto grid = hologate::QuadratureGrid::standard(space);
    for (std::uint32_t n = 0; n <= 4; ++n) {
      const HoloPoly f = HoloPoly::monomial(1, 6, {n});
      push("pair/t=" + fmt(t) + "/n=" + std::to_string(n),
           hologate::inner_product(space, f, f),
           hologate::inner_product_quadrature(space, f, f, grid));
    }
    const HoloPoly probe = hologate::add(
        hologate::add(HoloPoly::constant(1, 2, 1.0),
                      HoloPoly::monomial(1, 2, {1})),
        HoloPoly::monomial(1, 2, {2}, 0.5));
    const std::vector<Complex> at{Complex{0.5, 0.25}};
    push("kernel/t=" + fmt(t), probe.evaluate(at),
         hologate::kernel_reproduce(space, probe, at, grid));
    const std::vector<Complex> z{Complex{0.3}};
    const std::vector<Complex> w{Complex{0.7, -0.2}};
    push("semigroup/t=" + fmt(t), hologate::kernel_eval(space, z, w),
         hologate::kernel_semigroup_quadrature(space, z, w, grid));
  }
  {
    const BargmannSpace space(2, 1.0);
    const auto grid = hologate::QuadratureGrid::standard(space);
    const HoloPoly f = HoloPoly::monomial(2, 4, {1, 1});
    push("pair2d/t=1", hologate::inner_product(space, f, f),
         hologate::inner_product_quadrature(space, f, f, grid));
  }

  if (args.format == "json") {
    emit(entries.dump(), args.out);
  } else {
    emit(csv({"test", "exact_re", "exact_im", "quad_re", "quad_im", "rel_err"},
             rows),
         args.out);
  }
  if (!all_ok) {
    throw std::runtime_error(
        "quadrature disagrees with the closed form beyond 1e-7");
  }
}

struct InfoEntropyArgs {
  std::string components_text;
  double t = 1.0;
  std::string gate;
  std::string format = "csv";
  std::string out;
};

void run_info_entropy(const InfoEntropyArgs& args) {
  std::vector<HoloPoly> components;
  for (const Json& entry : Json::parse(args.components_text)) {
    components.push_back(hologate::poly_from_json(entry));
  }
  if (components.empty()) {
    throw std::invalid_argument("the ensemble needs at least one component");
  }
  const BargmannSpace space(components[0].dimension(), args.t);
  const hologate::ChannelEnsemble ensemble(space, components);
  const hologate::ProbVector p = hologate::channel_probabilities(ensemble);
  const double entropy = hologate::shannon_entropy(p);

  std::vector<std::vector<std::string>> rows;
  Json summary;
  Json probabilities = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    rows.push_back({"p_" + std::to_string(i), fmt(p[i])});
    probabilities.push_back(p[i]);
  }
  rows.push_back({"entropy", fmt(entropy)});
  summary["probabilities"] = std::move(probabilities);
  summary["entropy"] = entropy;
  if (!args.gate.empty()) {
    const auto op = hologate::standard_gate(hologate::parse_gate(args.gate));
    const double change = hologate::entropy_change(ensemble, op);
    rows.push_back({"entropy_change", fmt(change)});
    summary["entropy_change"] = change;
  }
  if (args.format == "json") {
    emit(summary.dump(), args.out);
  } else {
    emit(csv({"quantity", "value"}, rows), args.out);
  }
}

struct PendulumArgs {
  double omega0 = 1.0;
  double coupling = 0.0;
  std::string format = "csv";
  std::string out;
};

void run_pendulum_table(const PendulumArgs& args) {
  hologate::PendulumParams params;
  params.omega0 = args.omega0;
  params.coupling = args.coupling;
  const auto table = hologate::pendulum_gate_table(params);
  std::vector<std::vector<std::string>> rows;
  Json entries = Json::array();
  for (const auto& row : table) {
    rows.push_back({row.label, hologate::to_string(row.image),
                    hologate::format_complex(row.expectation)});
    entries.push_back(
        Json{{"gate", row.label},
             {"image", hologate::poly_to_json(row.image)},
             {"expectation", Json{{"re", row.expectation.real()},
                                  {"im", row.expectation.imag()}}}});
  }
  if (args.format == "json") {
    emit(entries.dump(), args.out);
  } else {
    emit(csv({"gate", "image", "expectation"}, rows), args.out);
  }
}

void run_pendulum_modes(const PendulumArgs& args) {
  Eigen::MatrixXd freq_squared(2, 2);
  const double w2 = args.omega0 * args.omega0;
  freq_squared << w2 + args.coupling, -args.coupling, -args.coupling,
      w2 + args.coupling;
  const auto modes = hologate::normal_modes(freq_squared);
  std::vector<std::vector<std::string>> rows;
  Json values = Json::array();
  for (std::size_t i = 0; i < modes.size(); ++i) {
    rows.push_back({std::to_string(i), fmt(modes[i])});
    values.push_back(modes[i]);
  }
  if (args.format == "json") {
    emit(Json{{"modes", std::move(values)}}.dump(), args.out);
  } else {
    emit(csv({"mode_index", "frequency"}, rows), args.out);
  }
}

struct FhnArgs {
  std::size_t cells = 64;
  double dx = 1.0;
  double diff_a = 1.0;
  double diff_b = 0.5;
  double alpha = 0.3;
  double beta = 0.8;
  double dt = 0.2;
  std::size_t steps = 500;
  unsigned seed = 0;
  double amplitude = 0.1;
  std::string format = "csv";
  std::string out;
};

void run_fhn(const FhnArgs& args) {
  const hologate::RDConfig config(args.cells, args.dx, args.diff_a,
                                  args.diff_b, args.alpha, args.beta, args.dt,
                                  args.steps);
  std::mt19937 rng(args.seed);
  std::uniform_real_distribution<double> amp(-args.amplitude, args.amplitude);
  hologate::RDFields fields{std::vector<double>(args.cells),
                            std::vector<double>(args.cells)};
  for (auto& v : fields.a) v = amp(rng);
  for (auto& v : fields.b) v = amp(rng);
  const auto final_fields = hologate::simulate_fhn(config, fields);

  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < args.cells; ++i) {
    rows.push_back({std::to_string(i), fmt(final_fields.a[i]),
                    fmt(final_fields.b[i])});
  }
  if (args.format == "json") {
    emit(Json{{"a", final_fields.a}, {"b", final_fields.b}}.dump(), args.out);
  } else {
    emit(csv({"cell_index", "a", "b"}, rows), args.out);
  }
}

struct MemristorArgs {
  double dt = 0.01;
  std::size_t steps = 100;
  std::string input = "const:1";
  std::string format = "csv";
  std::string out;
};

void run_memristor(const MemristorArgs& args) {
  const auto colon = args.input.find(':');
  const std::string kind = args.input.substr(0, colon);
  const double parameter =
      colon == std::string::npos ? 1.0 : std::stod(args.input.substr(colon + 1));
  std::vector<double> drive(args.steps + 1);
  for (std::size_t k = 0; k < drive.size(); ++k) {
    const double time = static_cast<double>(k) * args.dt;
    if (kind == "const") {
      drive[k] = parameter;
    } else if (kind == "sin") {
      drive[k] = std::sin(parameter * time);
    } else if (kind == "ramp") {
      drive[k] = parameter * time;
    } else {
      throw std::invalid_argument("unknown input shape '" + kind +
                                  "', expected const:V, sin:W, or ramp:K");
    }
  }

  // Leaky charge state driven by the input; the readout conductance is the
  // state itself, so the response is state times stimulus.
  auto f = [](const Eigen::VectorXd& x, double u, double) {
    return (Eigen::VectorXd::Constant(1, u) - x).eval();
  };
  auto g = [](const Eigen::VectorXd& x, double, double) { return x(0); };
  const auto trajectory = hologate::simulate_memristive(
      f, g, Eigen::VectorXd::Zero(1), drive, args.dt, args.steps);

  std::vector<std::vector<std::string>> rows;
  Json entries = Json::array();
  for (std::size_t k = 0; k < trajectory.time.size(); ++k) {
    rows.push_back({fmt(trajectory.time[k]), fmt(trajectory.stimulus[k]),
                    fmt(trajectory.state[k](0)), fmt(trajectory.response[k])});
    entries.push_back(Json{{"time", trajectory.time[k]},
                           {"stimulus", trajectory.stimulus[k]},
                           {"state", trajectory.state[k](0)},
                           {"response", trajectory.response[k]}});
  }
  if (args.format == "json") {
    emit(entries.dump(), args.out);
  } else {
    emit(csv({"time", "stimulus", "state", "response"}, rows), args.out);
  }
}

struct NeuronArgs {
  std::string config_text;
  std::string format = "csv";
  std::string out;
};

hologate::Activation parse_activation(const std::string& name) {
  if (name == "identity") return hologate::Activation::identity;
  if (name == "step") return hologate::Activation::step;
  if (name == "logistic") return hologate::Activation::logistic;
  throw std::invalid_argument("unknown activation '" + name +
                              "', expected identity, step, or logistic");
}

void run_neuron_eval(const NeuronArgs& args) {
  const Json config = Json::parse(args.config_text);
  const BargmannSpace space = hologate::space_from_json(config.at("space"));
  hologate::NeuronParams params;
  params.weights = config.at("weights").get<std::vector<double>>();
  params.bias = config.value("bias", 0.0);
  params.activation =
      parse_activation(config.value("activation", std::string("identity")));
  std::vector<hologate::GateInput> inputs;
  for (const Json& entry : config.at("inputs")) {
    inputs.push_back(
        {space, hologate::poly_from_json(entry.at("state")),
         hologate::standard_gate(
             hologate::parse_gate(entry.at("gate").get<std::string>()))});
  }
  const double value = hologate::neuron_forward(params, inputs);
  if (args.format == "json") {
    emit(Json{{"output", value}}.dump(), args.out);
  } else {
    emit(csv({"quantity", "value"}, {{"output", fmt(value)}}), args.out);
  }
}

struct UplRunArgs {
  std::string program_path;
  std::string format = "json";
  std::string out;
};

void run_upl_program(const UplRunArgs& args) {
  const auto program =
      hologate::program_from_json(load_json_file(args.program_path));
  const auto catalog = hologate::run_upl(program);
  if (args.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& record : catalog) {
      rows.push_back({record.gate,
                      hologate::format_complex(record.expectation),
                      record.classification ==
                              hologate::Classification::classical
                          ? "classical"
                          : "quantum"});
    }
    emit(csv({"gate", "expectation", "classification"}, rows), args.out);
  } else {
    emit(hologate::catalog_to_json(catalog).dump(), args.out);
  }
}

struct UplLayersArgs {
  std::string schedule_path;
  std::string trace_out;
  std::string format = "json";
};

void run_upl_layers(const UplLayersArgs& args) {
  auto layers = hologate::schedule_from_json(load_json_file(args.schedule_path));
  const auto result = hologate::schedule_layers(std::move(layers));
  if (args.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& entry : result.trace) {
      rows.push_back({std::to_string(entry.layer_index),
                      std::to_string(entry.start_tick),
                      std::to_string(entry.end_tick),
                      std::to_string(entry.catalog_size)});
    }
    emit(csv({"layer", "start_tick", "end_tick", "catalog_size"}, rows),
         args.trace_out);
  } else {
    emit(hologate::trace_to_json(result.trace).dump(), args.trace_out);
  }
}

void add_format_options(CLI::App* cmd, std::string& format, std::string& out) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", out, "Write to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logic gates as differential operators on holomorphic states"};
  app.require_subcommand(1);

  auto* gates_cmd =
      app.add_subcommand("gates", "Apply standard gates to states");
  gates_cmd->require_subcommand(1);
  auto gates_table = std::make_shared<GatesTableArgs>();
  {
    auto* cmd = gates_cmd->add_subcommand(
        "table", "Tabulate gate images and expectation values for a state");
    cmd->add_option("--state", gates_table->state_text,
                    "State as JSON, e.g. "
                    "'{\"dim\":2,\"terms\":[{\"idx\":[1,1],\"re\":1.0}]}'")
        ->required();
    cmd->add_option("--gates", gates_table->gates,
                    "Comma-separated gate names, e.g. X,Z or Rx:0.5")
        ->required();
    cmd->add_option("--t", gates_table->t, "Scale of the state space");
    add_format_options(cmd, gates_table->format, gates_table->out);
    cmd->callback([gates_table] { run_gates_table(*gates_table); });
  }

  auto* bargmann_cmd =
      app.add_subcommand("bargmann", "Holomorphic space diagnostics");
  bargmann_cmd->require_subcommand(1);
  auto bargmann_check = std::make_shared<BargmannCheckArgs>();
  {
    auto* cmd = bargmann_cmd->add_subcommand(
        "check", "Cross-check closed-form pairings against quadrature");
    add_format_options(cmd, bargmann_check->format, bargmann_check->out);
    cmd->callback([bargmann_check] { run_bargmann_check(*bargmann_check); });
  }

  auto* info_cmd =
      app.add_subcommand("info", "Channel probabilities and entropy");
  info_cmd->require_subcommand(1);
  auto info_entropy = std::make_shared<InfoEntropyArgs>();
  {
    auto* cmd = info_cmd->add_subcommand(
        "entropy", "Entropy of the norm distribution of an ensemble");
    cmd->add_option("--components", info_entropy->components_text,
                    "JSON array of states")
        ->required();
    cmd->add_option("--t", info_entropy->t, "Scale of the state space");
    cmd->add_option("--gate", info_entropy->gate,
                    "Also report the entropy change under this gate");
    add_format_options(cmd, info_entropy->format, info_entropy->out);
    cmd->callback([info_entropy] { run_info_entropy(*info_entropy); });
  }

  auto* pendulum_cmd =
      app.add_subcommand("pendulum", "Coupled pendulums as a two-mode state");
  pendulum_cmd->require_subcommand(1);
  auto pendulum = std::make_shared<PendulumArgs>();
  {
    auto* cmd = pendulum_cmd->add_subcommand(
        "table", "Gate images and expectations on the pendulum state");
    cmd->add_option("--omega0", pendulum->omega0, "Natural frequency");
    cmd->add_option("--coupling", pendulum->coupling, "Spring coupling s/M");
    add_format_options(cmd, pendulum->format, pendulum->out);
    cmd->callback([pendulum] { run_pendulum_table(*pendulum); });
  }
  auto pendulum_modes = std::make_shared<PendulumArgs>();
  {
    auto* cmd = pendulum_cmd->add_subcommand(
        "modes", "Normal-mode frequencies of the coupled pair");
    cmd->add_option("--omega0", pendulum_modes->omega0, "Natural frequency");
    cmd->add_option("--coupling", pendulum_modes->coupling,
                    "Spring coupling s/M");
    add_format_options(cmd, pendulum_modes->format, pendulum_modes->out);
    cmd->callback([pendulum_modes] { run_pendulum_modes(*pendulum_modes); });
  }

  auto fhn = std::make_shared<FhnArgs>();
  {
    auto* cmd = app.add_subcommand(
        "fhn", "Reaction-diffusion lattice, final fields after the run");
    cmd->add_option("--cells", fhn->cells, "Number of lattice cells");
    cmd->add_option("--dx", fhn->dx, "Cell width");
    cmd->add_option("--diff-a", fhn->diff_a, "Activator diffusion");
    cmd->add_option("--diff-b", fhn->diff_b, "Inhibitor diffusion");
    cmd->add_option("--alpha", fhn->alpha, "Activator source term");
    cmd->add_option("--beta", fhn->beta, "Inhibitor relaxation rate");
    cmd->add_option("--dt", fhn->dt, "Time step");
    cmd->add_option("--steps", fhn->steps, "Number of steps");
    cmd->add_option("--seed", fhn->seed, "Seed for the initial fields");
    cmd->add_option("--amplitude", fhn->amplitude,
                    "Uniform range of the initial fields");
    add_format_options(cmd, fhn->format, fhn->out);
    cmd->callback([fhn] { run_fhn(*fhn); });
  }

  auto memristor = std::make_shared<MemristorArgs>();
  {
    auto* cmd = app.add_subcommand(
        "memristor", "Drive the leaky-state demo system and print the run");
    cmd->add_option("--dt", memristor->dt, "Time step");
    cmd->add_option("--steps", memristor->steps, "Number of steps");
    cmd->add_option("--input", memristor->input,
                    "Stimulus shape: const:V, sin:W, or ramp:K");
    add_format_options(cmd, memristor->format, memristor->out);
    cmd->callback([memristor] { run_memristor(*memristor); });
  }

  auto* neuron_cmd =
      app.add_subcommand("neuron", "Neurons fed by gate expectations");
  neuron_cmd->require_subcommand(1);
  auto neuron = std::make_shared<NeuronArgs>();
  {
    auto* cmd = neuron_cmd->add_subcommand(
        "eval", "Evaluate one neuron on gate-expectation inputs");
    cmd->add_option("--config", neuron->config_text,
                    "JSON with space, weights, bias, activation, inputs")
        ->required();
    add_format_options(cmd, neuron->format, neuron->out);
    cmd->callback([neuron] { run_neuron_eval(*neuron); });
  }

  auto* upl_cmd = app.add_subcommand("upl", "Program pipeline and layers");
  upl_cmd->require_subcommand(1);
  auto upl_run = std::make_shared<UplRunArgs>();
  {
    auto* cmd = upl_cmd->add_subcommand(
        "run", "Run a program file and write its pattern catalog");
    cmd->add_option("--program", upl_run->program_path, "Program JSON file")
        ->required();
    cmd->add_option("--format", upl_run->format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", upl_run->out,
                    "Write the catalog here instead of stdout");
    cmd->callback([upl_run] { run_upl_program(*upl_run); });
  }
  auto upl_layers = std::make_shared<UplLayersArgs>();
  {
    auto* cmd = upl_cmd->add_subcommand(
        "layers", "Run a layer schedule and write its execution trace");
    cmd->add_option("--schedule", upl_layers->schedule_path,
                    "Schedule JSON file")
        ->required();
    cmd->add_option("--trace", upl_layers->trace_out,
                    "Write the trace here instead of stdout");
    cmd->add_option("--format", upl_layers->format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->callback([upl_layers] { run_upl_layers(*upl_layers); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
