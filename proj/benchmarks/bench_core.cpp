#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hologate/bargmann.hpp"
#include "hologate/gates.hpp"
#include "hologate/upl.hpp"

namespace {

using hologate::BargmannSpace;
using hologate::Complex;
using hologate::DiffOp;
using hologate::HoloPoly;
using hologate::MultiIndex;

HoloPoly dense_state(std::uint32_t d, std::uint32_t D, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::vector<std::pair<MultiIndex, Complex>> entries;
  std::vector<MultiIndex> stack{MultiIndex(d, 0)};
  MultiIndex idx(d, 0);
  const std::function<void(std::uint32_t, std::uint32_t)> walk =
      [&](std::uint32_t var, std::uint32_t budget) {
        if (var == d) {
          entries.push_back({idx, Complex{coeff(rng), coeff(rng)}});
          return;
        }
        for (std::uint32_t k = 0; k <= budget; ++k) {
          idx[var] = k;
          walk(var + 1, budget - k);
        }
        idx[var] = 0;
      };
  walk(0, D);
  return HoloPoly::from_terms(d, D, entries);
}

void inner_product_exact(benchmark::State& state) {
  const auto degree = static_cast<std::uint32_t>(state.range(0));
  const BargmannSpace space(2, 1.0);
  const HoloPoly f = dense_state(2, degree, 11);
  const HoloPoly g = dense_state(2, degree, 12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hologate::inner_product(space, f, g));
  }
}
BENCHMARK(inner_product_exact)->Arg(4)->Arg(8)->Arg(12);

void inner_product_by_quadrature(benchmark::State& state) {
  const BargmannSpace space(1, 1.0);
  const auto grid = hologate::QuadratureGrid::standard(space);
  const HoloPoly f = dense_state(1, 6, 21);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hologate::inner_product_quadrature(space, f, f, grid));
  }
}
BENCHMARK(inner_product_by_quadrature);

void gate_application(benchmark::State& state) {
  const auto degree = static_cast<std::uint32_t>(state.range(0));
  const HoloPoly f = dense_state(2, degree, 31);
  const DiffOp h = hologate::standard_gate(hologate::GateKind::hadamard);
  for (auto _ : state) {
    benchmark::DoNotOptimize(h.apply(f));
  }
}
BENCHMARK(gate_application)->Arg(4)->Arg(8)->Arg(12);

void operator_composition(benchmark::State& state) {
  const DiffOp h = hologate::standard_gate(hologate::GateKind::hadamard);
  const DiffOp x = hologate::standard_gate(hologate::GateKind::pauli_x);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hologate::compose(h, hologate::compose(x, h)));
  }
}
BENCHMARK(operator_composition);

void contour_application(benchmark::State& state) {
  const auto nodes = static_cast<std::size_t>(state.range(0));
  const HoloPoly f = dense_state(2, 3, 41);
  const DiffOp x = hologate::standard_gate(hologate::GateKind::pauli_x);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hologate::apply_via_cauchy(x, f, 1.0, nodes));
  }
}
BENCHMARK(contour_application)->Arg(16)->Arg(64)->Arg(256);

void pipeline_run(benchmark::State& state) {
  hologate::UplProgram program{BargmannSpace(2, 1.0), {}, {}, 1};
  program.subsystems.push_back(
      {"q1", HoloPoly::monomial(2, 4, {1, 0}), {}, 0, 8});
  for (auto kind : {hologate::GateKind::pauli_x, hologate::GateKind::pauli_y,
                    hologate::GateKind::pauli_z, hologate::GateKind::hadamard,
                    hologate::GateKind::phase_s}) {
    program.gate_set.push_back(hologate::labeled_gate({kind}));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(hologate::run_upl(program));
  }
}
BENCHMARK(pipeline_run);

}  // namespace

BENCHMARK_MAIN();
