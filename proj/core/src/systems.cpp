#include "hologate/systems.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include <Eigen/Eigenvalues>

#include "hologate/errors.hpp"
#include "hologate/gates.hpp"

namespace hologate {

namespace {

void validate_pendulum(const PendulumParams& params) {
  if (!(params.omega0 > 0.0)) {
    throw std::invalid_argument("pendulum natural frequency must be positive");
  }
  if (!(params.coupling >= 0.0)) {
    throw std::invalid_argument("pendulum coupling must be nonnegative");
  }
}

}  // namespace

PendulumState pendulum_state(const PendulumParams& params, double time) {
  validate_pendulum(params);
  const double omega =
      std::sqrt(params.omega0 * params.omega0 + 2.0 * params.coupling);
  PendulumState result{
      HoloPoly::from_terms(2, 2, {{{1, 1}, params.amp_a * params.amp_b}}),
      std::exp(Complex{0.0, params.omega0 * time + params.phase_a}),
      std::exp(Complex{0.0, omega * time + params.phase_b}),
      params.omega0,
      omega,
  };
  return result;
}

std::vector<GateTableRow> pendulum_gate_table(const PendulumParams& params) {
  const PendulumState pendulum = pendulum_state(params, 0.0);
  const BargmannSpace space(2, 1.0);
  const GateKind kinds[] = {GateKind::pauli_x, GateKind::pauli_y,
                            GateKind::pauli_z, GateKind::identity,
                            GateKind::hadamard};
  std::vector<GateTableRow> rows;
  rows.reserve(std::size(kinds));
  for (GateKind kind : kinds) {
    const DiffOp op = standard_gate(kind);
    rows.push_back({gate_label(GateSpec{kind}), op.apply(pendulum.state),
                    expectation(space, op, pendulum.state)});
  }
  return rows;
}

std::vector<double> normal_modes(const Eigen::MatrixXd& freq_squared) {
  if (freq_squared.rows() != freq_squared.cols()) {
    throw std::invalid_argument("frequency matrix must be square");
  }
  const double scale = std::max(1.0, freq_squared.cwiseAbs().maxCoeff());
  if ((freq_squared - freq_squared.transpose()).cwiseAbs().maxCoeff() >
      1e-12 * scale) {
    throw std::invalid_argument("frequency matrix must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(freq_squared);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigenvalue computation failed");
  }
  std::vector<double> modes;
  modes.reserve(static_cast<std::size_t>(freq_squared.rows()));
  for (Eigen::Index i = 0; i < freq_squared.rows(); ++i) {
    double lambda = solver.eigenvalues()(i);
    if (lambda < -1e-10) {
      throw stability_error("negative squared frequency " +
                            format_double(lambda) +
                            ": configuration is not oscillatory");
    }
    modes.push_back(std::sqrt(std::max(lambda, 0.0)));
  }
  return modes;
}

MemristiveTrajectory simulate_memristive(const MemristiveDerivative& f,
                                         const MemristiveReadout& g,
                                         Eigen::VectorXd x0,
                                         const std::vector<double>& input,
                                         double dt, std::size_t steps) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("memristive step size must be positive");
  }
  if (input.size() < steps + 1) {
    throw std::invalid_argument(
        "memristive input must supply at least steps + 1 samples, got " +
        std::to_string(input.size()));
  }

  MemristiveTrajectory trajectory;
  trajectory.time.reserve(steps + 1);
  trajectory.state.reserve(steps + 1);
  trajectory.stimulus.reserve(steps + 1);
  trajectory.response.reserve(steps + 1);

  auto record = [&](std::size_t k, const Eigen::VectorXd& x) {
    const double t = static_cast<double>(k) * dt;
    if (!x.allFinite()) {
      throw divergence_error("memristive state left the finite range", k);
    }
    const double y = g(x, input[k], t) * input[k];
    if (!std::isfinite(y)) {
      throw divergence_error("memristive readout left the finite range", k);
    }
    trajectory.time.push_back(t);
    trajectory.state.push_back(x);
    trajectory.stimulus.push_back(input[k]);
    trajectory.response.push_back(y);
  };

  Eigen::VectorXd x = std::move(x0);
  record(0, x);
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    const double u0 = input[k];
    const double u1 = input[k + 1];
    const double u_half = 0.5 * (u0 + u1);
    const Eigen::VectorXd k1 = f(x, u0, t);
    const Eigen::VectorXd k2 = f(x + 0.5 * dt * k1, u_half, t + 0.5 * dt);
    const Eigen::VectorXd k3 = f(x + 0.5 * dt * k2, u_half, t + 0.5 * dt);
    const Eigen::VectorXd k4 = f(x + dt * k3, u1, t + dt);
    x += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    record(k + 1, x);
  }
  return trajectory;
}

RDConfig::RDConfig(std::size_t cells_in, double dx_in, double diff_a_in,
                   double diff_b_in, double alpha_in, double beta_in,
                   double dt_in, std::size_t steps_in)
    : cells(cells_in),
      dx(dx_in),
      diff_a(diff_a_in),
      diff_b(diff_b_in),
      alpha(alpha_in),
      beta(beta_in),
      dt(dt_in),
      steps(steps_in) {
  if (cells == 0) {
    throw std::invalid_argument("grid needs at least one cell");
  }
  if (!(dx > 0.0)) {
    throw std::invalid_argument("cell width must be positive");
  }
  if (!(diff_a >= 0.0) || !(diff_b >= 0.0)) {
    throw std::invalid_argument("diffusion coefficients must be nonnegative");
  }
  if (!(dt > 0.0)) {
    throw std::invalid_argument("time step must be positive");
  }
  const double max_diff = std::max(diff_a, diff_b);
  if (max_diff > 0.0) {
    const double bound = dx * dx / (4.0 * max_diff);
    if (dt > bound) {
      throw stability_error("time step " + format_double(dt) +
                            " exceeds the diffusion stability bound " +
                            format_double(bound));
    }
  }
}

RDFields simulate_fhn(const RDConfig& config, RDFields initial) {
  if (initial.a.size() != config.cells || initial.b.size() != config.cells) {
    throw dimension_error("field size does not match the grid: expected " +
                          std::to_string(config.cells) + " cells");
  }

  const std::size_t n = config.cells;
  const double inv_dx2 = 1.0 / (config.dx * config.dx);
  std::vector<double> next_a(n), next_b(n);
  std::vector<double>& a = initial.a;
  std::vector<double>& b = initial.b;

  for (std::size_t step = 0; step < config.steps; ++step) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t left = (i == 0) ? n - 1 : i - 1;
      const std::size_t right = (i + 1 == n) ? 0 : i + 1;
      const double lap_a = (a[left] - 2.0 * a[i] + a[right]) * inv_dx2;
      const double lap_b = (b[left] - 2.0 * b[i] + b[right]) * inv_dx2;
      next_a[i] = a[i] + config.dt * (config.diff_a * lap_a + a[i] -
                                      a[i] * a[i] * a[i] - b[i] + config.alpha);
      next_b[i] = b[i] + config.dt * (config.diff_b * lap_b +
                                      config.beta * (a[i] - b[i]));
      if (!std::isfinite(next_a[i]) || !std::isfinite(next_b[i])) {
        throw divergence_error("field value left the finite range in cell " +
                                   std::to_string(i),
                               step);
      }
    }
    a.swap(next_a);
    b.swap(next_b);
  }
  return initial;
}

Complex fields_to_state(const BargmannSpace& space,
                        const RealLineSamples& field_a,
                        const RealLineSamples& field_b, Complex z1,
                        Complex z2) {
  if (space.dimension != 1) {
    throw dimension_error(
        "field lift pairs two one-variable transforms; the space must be "
        "one-dimensional");
  }
  return sb_transform(space, field_a, z1) * sb_transform(space, field_b, z2);
}

namespace {

double activate(Activation activation, double u) {
  switch (activation) {
    case Activation::identity:
      return u;
    case Activation::step:
      return u > 0.0 ? 1.0 : 0.0;
    case Activation::logistic:
      return 1.0 / (1.0 + std::exp(-u));
  }
  throw std::invalid_argument("unknown activation");
}

double gate_measurement(const GateInput& input) {
  const Complex value = expectation(input.space, input.op, input.state);
  if (std::abs(value.imag()) > 1e-9) {
    throw complex_input_error("gate expectation " + format_double(value.real()) +
                              (value.imag() < 0 ? "" : "+") +
                              format_double(value.imag()) +
                              "i is not real enough to feed a neuron");
  }
  return value.real();
}

std::vector<double> gate_measurements(const std::vector<GateInput>& inputs) {
  std::vector<double> values;
  values.reserve(inputs.size());
  for (const GateInput& input : inputs) {
    values.push_back(gate_measurement(input));
  }
  return values;
}

double weighted_sum(const NeuronParams& params,
                    const std::vector<double>& inputs) {
  if (params.weights.size() != inputs.size()) {
    throw dimension_error("neuron has " +
                          std::to_string(params.weights.size()) +
                          " weights but received " +
                          std::to_string(inputs.size()) + " inputs");
  }
  double u = params.bias;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    u += params.weights[i] * inputs[i];
  }
  return u;
}

}  // namespace

double neuron_forward(const NeuronParams& params,
                      const std::vector<GateInput>& inputs) {
  return activate(params.activation,
                  weighted_sum(params, gate_measurements(inputs)));
}

TrainResult perceptron_train(const std::vector<PerceptronSample>& samples,
                             std::size_t epochs, double rate,
                             std::optional<NeuronParams> initial) {
  if (samples.empty()) {
    throw std::invalid_argument("perceptron training needs samples");
  }
  const std::size_t width = samples.front().inputs.size();
  for (const PerceptronSample& sample : samples) {
    if (sample.inputs.size() != width) {
      throw dimension_error("training samples disagree on input width");
    }
    if (sample.target != 0 && sample.target != 1) {
      throw std::invalid_argument("perceptron targets must be 0 or 1");
    }
  }

  NeuronParams params = initial.value_or(
      NeuronParams{std::vector<double>(width, 0.0), 0.0, Activation::step});
  if (params.weights.size() != width) {
    throw dimension_error("initial weights disagree with the sample width");
  }
  params.activation = Activation::step;

  TrainResult result;
  result.errors_per_epoch.reserve(epochs);
  for (std::size_t epoch = 0; epoch < epochs; ++epoch) {
    std::size_t errors = 0;
    for (const PerceptronSample& sample : samples) {
      const double out =
          activate(Activation::step, weighted_sum(params, sample.inputs));
      const double delta = static_cast<double>(sample.target) - out;
      if (delta != 0.0) {
        ++errors;
        for (std::size_t i = 0; i < width; ++i) {
          params.weights[i] += rate * delta * sample.inputs[i];
        }
        params.bias += rate * delta;
      }
    }
    result.errors_per_epoch.push_back(errors);
    if (errors == 0) {
      break;
    }
  }
  result.params = std::move(params);
  return result;
}

TrainResult perceptron_train(const std::vector<GateSample>& samples,
                             std::size_t epochs, double rate,
                             std::optional<NeuronParams> initial) {
  std::vector<PerceptronSample> numeric;
  numeric.reserve(samples.size());
  for (const GateSample& sample : samples) {
    numeric.push_back({gate_measurements(sample.inputs), sample.target});
  }
  return perceptron_train(numeric, epochs, rate, std::move(initial));
}

}  // namespace hologate
