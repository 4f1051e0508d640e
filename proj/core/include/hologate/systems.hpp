#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hologate/bargmann.hpp"
#include "hologate/diff_op.hpp"
#include "hologate/holo_poly.hpp"

namespace hologate {

/**
 * A pair of coupled pendulums read as two complex rotators. omega0 is the
 * natural frequency sqrt(g/l) of each pendulum, coupling the spring term
 * s/M; the second rotator advances at the shifted normal-mode frequency
 * sqrt(omega0^2 + 2 s/M). amp and phase scale and offset each rotator.
 */
struct PendulumParams {
  double omega0 = 1.0;
  double coupling = 0.0;
  Complex amp_a = 1.0;
  Complex amp_b = 1.0;
  double phase_a = 0.0;
  double phase_b = 0.0;
};

// The two-variable product state amp_a amp_b z1 z2 together with the
// numeric rotator values at the requested time and both mode frequencies.
struct PendulumState {
  HoloPoly state;
  Complex z1_value;
  Complex z2_value;
  double omega0;
  double omega;
};

PendulumState pendulum_state(const PendulumParams& params, double time);

struct GateTableRow {
  std::string label;
  HoloPoly image;
  Complex expectation;
};

// Images and normalized expectations of X, Y, Z, I, H on the pendulum
// product state.
std::vector<GateTableRow> pendulum_gate_table(const PendulumParams& params);

// Square roots of the eigenvalues of a symmetric frequency-squared matrix,
// ascending. Eigenvalues below -1e-10 mean the configuration is not
// oscillatory and are rejected.
std::vector<double> normal_modes(const Eigen::MatrixXd& freq_squared);

// State derivative and readout of a memristive system: the derivative maps
// (state, input, time) to dx/dt, the readout factor g multiplies the input
// to give the output y.
using MemristiveDerivative =
    std::function<Eigen::VectorXd(const Eigen::VectorXd&, double, double)>;
using MemristiveReadout =
    std::function<double(const Eigen::VectorXd&, double, double)>;

// One sample per step, index k at time k dt. The stimulus/state/response
// triple realizes the computational reading: stimulus S = u, state Q = x,
// response R = y.
struct MemristiveTrajectory {
  std::vector<double> time;
  std::vector<Eigen::VectorXd> state;
  std::vector<double> stimulus;
  std::vector<double> response;
};

// Fourth-order Runge-Kutta on dx/dt = f(x, u, t) with the input linearly
// interpolated at half steps; y = g(x, u, t) u. The input must supply
// steps + 1 samples.
MemristiveTrajectory simulate_memristive(const MemristiveDerivative& f,
                                         const MemristiveReadout& g,
                                         Eigen::VectorXd x0,
                                         const std::vector<double>& input,
                                         double dt, std::size_t steps);

/**
 * One-dimensional two-species reaction-diffusion configuration with
 * periodic boundaries. The reaction terms are a - a^3 - b + alpha for the
 * activator and beta (a - b) for the inhibitor. Construction enforces the
 * explicit-Euler stability bound dt <= dx^2 / (4 max(diff_a, diff_b)).
 */
struct RDConfig {
  RDConfig(std::size_t cells, double dx, double diff_a, double diff_b,
           double alpha, double beta, double dt, std::size_t steps);

  std::size_t cells;
  double dx;
  double diff_a;
  double diff_b;
  double alpha;
  double beta;
  double dt;
  std::size_t steps;
};

struct RDFields {
  std::vector<double> a;
  std::vector<double> b;
};

// Explicit Euler with a central periodic Laplacian. Non-finite field values
// abort with the offending step index.
RDFields simulate_fhn(const RDConfig& config, RDFields initial);

// Product of the holomorphic lifts of the two sampled fields, evaluated at
// (z1, z2). The space must be one-dimensional; both fields ride the same
// scale t.
Complex fields_to_state(const BargmannSpace& space,
                        const RealLineSamples& field_a,
                        const RealLineSamples& field_b, Complex z1,
                        Complex z2);

enum class Activation { identity, step, logistic };

struct NeuronParams {
  std::vector<double> weights;
  double bias = 0.0;
  Activation activation = Activation::identity;
};

// One neuron input produced by measuring a gate on a state.
struct GateInput {
  BargmannSpace space;
  HoloPoly state;
  DiffOp op;
};

// Expectation values feed the weighted sum u = sum w_i x_i; the result is
// activation(u + bias). Expectations must be real to 1e-9.
double neuron_forward(const NeuronParams& params,
                      const std::vector<GateInput>& inputs);

struct PerceptronSample {
  std::vector<double> inputs;
  int target;  // 0 or 1
};

struct GateSample {
  std::vector<GateInput> inputs;
  int target;
};

struct TrainResult {
  NeuronParams params;
  std::vector<std::size_t> errors_per_epoch;
};

// Classic perceptron rule with step activation: w += rate (target - out) x,
// bias += rate (target - out). Stops early once an epoch is error-free.
TrainResult perceptron_train(const std::vector<PerceptronSample>& samples,
                             std::size_t epochs, double rate,
                             std::optional<NeuronParams> initial = {});
TrainResult perceptron_train(const std::vector<GateSample>& samples,
                             std::size_t epochs, double rate,
                             std::optional<NeuronParams> initial = {});

}  // namespace hologate
