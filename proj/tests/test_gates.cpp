#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "hologate/errors.hpp"
#include "hologate/gates.hpp"

using hologate::BargmannSpace;
using hologate::Complex;
using hologate::DiffOp;
using hologate::GateKind;
using hologate::GateSpec;
using hologate::HoloPoly;
using hologate::MultiIndex;

namespace {

const Complex kI = hologate::kImaginaryUnit;

HoloPoly basis1(std::uint32_t d, std::uint32_t var) {
  MultiIndex idx(d, 0);
  idx[var] = 1;
  return HoloPoly::monomial(d, 4, idx);
}

DiffOp random_first_order(std::mt19937& rng, std::uint32_t d) {
  std::uniform_real_distribution<double> coeff(-1.5, 1.5);
  std::vector<std::tuple<MultiIndex, MultiIndex, Complex>> terms;
  for (std::uint32_t from = 0; from < d; ++from) {
    for (std::uint32_t to = 0; to < d; ++to) {
      MultiIndex c(d, 0), a(d, 0);
      c[from] = 1;
      a[to] = 1;
      terms.emplace_back(c, a, Complex{coeff(rng), coeff(rng)});
    }
  }
  return DiffOp::from_terms(d, terms);
}

HoloPoly random_state(std::mt19937& rng, std::uint32_t d, std::uint32_t D,
                      std::size_t terms) {
  std::uniform_int_distribution<std::uint32_t> deg(0, D);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::vector<std::pair<MultiIndex, Complex>> entries;
  for (std::size_t k = 0; k < terms; ++k) {
    MultiIndex idx(d, 0);
    std::uint32_t budget = deg(rng);
    for (std::uint32_t i = 0; i < d && budget > 0; ++i) {
      std::uniform_int_distribution<std::uint32_t> part(0, budget);
      idx[i] = part(rng);
      budget -= idx[i];
    }
    entries.emplace_back(idx, Complex{coeff(rng), coeff(rng)});
  }
  return HoloPoly::from_terms(d, D, entries);
}

}  // namespace

TEST_CASE("the NOT operator hops between the two variables") {
  auto x = hologate::standard_gate(GateKind::pauli_x);
  auto expected = DiffOp::from_terms(
      2, {{{1, 0}, {0, 1}, Complex{1.0}}, {{0, 1}, {1, 0}, Complex{1.0}}});
  CHECK(hologate::approx_equal(x, expected));
  CHECK(x.is_first_order());
}

TEST_CASE("controlled-NOT is the identity on the first pair and NOT on the second") {
  auto cnot = hologate::standard_gate(GateKind::cnot);
  auto expected = DiffOp::from_terms(
      4, {{{1, 0, 0, 0}, {1, 0, 0, 0}, Complex{1.0}},
          {{0, 1, 0, 0}, {0, 1, 0, 0}, Complex{1.0}},
          {{0, 0, 1, 0}, {0, 0, 0, 1}, Complex{1.0}},
          {{0, 0, 0, 1}, {0, 0, 1, 0}, Complex{1.0}}});
  CHECK(hologate::approx_equal(cnot, expected));
}

TEST_CASE("zero-angle z-rotation is the identity operator") {
  auto rz0 = hologate::standard_gate(GateSpec{GateKind::rotation_z, 0.0});
  auto id = hologate::standard_gate(GateKind::identity);
  CHECK(hologate::approx_equal(rz0, id));
}

TEST_CASE("matrix conversion reproduces the NOT operator") {
  Eigen::MatrixXcd m(2, 2);
  m << 0, 1, 1, 0;
  CHECK(hologate::approx_equal(hologate::matrix_to_operator(m),
                               hologate::standard_gate(GateKind::pauli_x)));
}

TEST_CASE("matrix conversion of the identity counts both variables") {
  CHECK(hologate::approx_equal(
      hologate::matrix_to_operator(Eigen::MatrixXcd::Identity(2, 2)),
      hologate::standard_gate(GateKind::identity)));
}

TEST_CASE("matrix entries occupy the expected hopping slots") {
  Eigen::MatrixXcd m(2, 2);
  m << 1, 2, 3, 4;
  auto expected = DiffOp::from_terms(
      2, {{{1, 0}, {1, 0}, Complex{1.0}},
          {{1, 0}, {0, 1}, Complex{2.0}},
          {{0, 1}, {1, 0}, Complex{3.0}},
          {{0, 1}, {0, 1}, Complex{4.0}}});
  CHECK(hologate::approx_equal(hologate::matrix_to_operator(m), expected));
  CHECK_THROWS_AS(hologate::matrix_to_operator(Eigen::MatrixXcd::Zero(2, 3)),
                  hologate::dimension_error);
}

TEST_CASE("NOT exchanges spin-up and spin-down") {
  auto x = hologate::standard_gate(GateKind::pauli_x);
  CHECK(hologate::approx_equal(x.apply(basis1(2, 0)), basis1(2, 1)));
}

TEST_CASE("NOT doubles up the pair state") {
  auto x = hologate::standard_gate(GateKind::pauli_x);
  auto f = HoloPoly::monomial(2, 2, {1, 1});
  auto expected =
      HoloPoly::from_terms(2, 2, {{{2, 0}, 1.0}, {{0, 2}, 1.0}});
  CHECK(hologate::approx_equal(x.apply(f), expected));
}

TEST_CASE("the phase-difference operator annihilates the balanced pair") {
  auto z = hologate::standard_gate(GateKind::pauli_z);
  auto f = HoloPoly::monomial(2, 2, {1, 1});
  CHECK(z.apply(f).is_zero());
}

TEST_CASE("composition makes NOT an involution on single-excitation states") {
  auto x = hologate::standard_gate(GateKind::pauli_x);
  auto xx = hologate::compose(x, x);
  CHECK(hologate::approx_equal(xx.apply(basis1(2, 0)), basis1(2, 0)));
  CHECK(hologate::approx_equal(xx.apply(basis1(2, 1)), basis1(2, 1)));
}

TEST_CASE("commuting a derivative past its own variable adds one") {
  auto d1 = DiffOp::word(1, {0}, {1});
  auto z1 = DiffOp::word(1, {1}, {0});
  auto product = hologate::compose(d1, z1);
  auto expected = DiffOp::from_terms(
      1, {{{1}, {1}, Complex{1.0}}, {{0}, {0}, Complex{1.0}}});
  CHECK(hologate::approx_equal(product, expected));
}

TEST_CASE("composing with the identity preserves single-excitation action") {
  auto id = hologate::standard_gate(GateKind::identity);
  auto y = hologate::standard_gate(GateKind::pauli_y);
  auto iy = hologate::compose(id, y);
  for (std::uint32_t var : {0u, 1u}) {
    CHECK(hologate::approx_equal(iy.apply(basis1(2, var)),
                                 y.apply(basis1(2, var))));
  }
}

TEST_CASE("spin commutators close with doubled structure constants") {
  auto sx = hologate::jordan_schwinger(hologate::SpinComponent::x);
  auto sy = hologate::jordan_schwinger(hologate::SpinComponent::y);
  auto sz = hologate::jordan_schwinger(hologate::SpinComponent::z);
  CHECK(hologate::approx_equal(hologate::commutator(sx, sy),
                               hologate::scaled(sz, 2.0 * kI)));
  CHECK(hologate::commutator(sz, sz).is_zero());
}

TEST_CASE("halved spin generators close with unit structure constants") {
  auto jx = hologate::scaled(
      hologate::jordan_schwinger(hologate::SpinComponent::x), 0.5);
  auto jy = hologate::scaled(
      hologate::jordan_schwinger(hologate::SpinComponent::y), 0.5);
  auto jz = hologate::scaled(
      hologate::jordan_schwinger(hologate::SpinComponent::z), 0.5);
  CHECK(hologate::approx_equal(hologate::commutator(jx, jy),
                               hologate::scaled(jz, kI)));
}

TEST_CASE("squared total spin is 3/4 on a single excitation") {
  auto j2 = hologate::jordan_schwinger(hologate::SpinComponent::squared_total);
  auto z1 = basis1(2, 0);
  CHECK(hologate::approx_equal(j2.apply(z1), z1.scaled(0.75)));
}

TEST_CASE("squared total spin is 2 on the balanced pair") {
  auto j2 = hologate::jordan_schwinger(hologate::SpinComponent::squared_total);
  auto f = HoloPoly::monomial(2, 2, {1, 1});
  CHECK(hologate::approx_equal(j2.apply(f), f.scaled(2.0)));
}

TEST_CASE("the number-difference operator doubles on z1 squared") {
  auto sz = hologate::jordan_schwinger(hologate::SpinComponent::z);
  auto f = HoloPoly::monomial(2, 2, {2, 0}, 1.0 / std::sqrt(2.0));
  CHECK(hologate::approx_equal(sz.apply(f), f.scaled(2.0)));
}

TEST_CASE("expectations of the off-diagonal gates vanish on the pair state") {
  BargmannSpace space(2, 1.0);
  auto f = HoloPoly::monomial(2, 2, {1, 1});
  for (GateKind kind :
       {GateKind::pauli_x, GateKind::pauli_y, GateKind::hadamard}) {
    auto v = hologate::expectation(space, hologate::standard_gate(kind), f);
    CHECK(std::abs(v) < 1e-12);
  }
}

TEST_CASE("the phase-difference expectation of spin-up is one") {
  BargmannSpace space(2, 1.0);
  auto z = hologate::standard_gate(GateKind::pauli_z);
  CHECK(std::abs(hologate::expectation(space, z, basis1(2, 0)) -
                 Complex{1.0}) < 1e-14);
}

TEST_CASE("expectation modes differ by the norm of the state") {
  BargmannSpace space(2, 1.0);
  auto z = hologate::standard_gate(GateKind::pauli_z);
  auto f = basis1(2, 0).scaled(2.0);  // squared norm 4
  auto normalized = hologate::expectation(space, z, f,
                                          hologate::ExpectationMode::normalized);
  auto rooted = hologate::expectation(space, z, f,
                                      hologate::ExpectationMode::square_root);
  CHECK(std::abs(normalized - Complex{1.0}) < 1e-14);
  CHECK(std::abs(rooted - Complex{2.0}) < 1e-14);
}

TEST_CASE("expectation rejects the zero state") {
  BargmannSpace space(2, 1.0);
  auto zero = HoloPoly::from_terms(2, 2, {});
  CHECK_THROWS_AS(
      hologate::expectation(space, hologate::standard_gate(GateKind::pauli_z),
                            zero),
      hologate::zero_state_error);
}

TEST_CASE("NOT transfers occupation across neighbouring monomials") {
  BargmannSpace space(2, 1.0);
  auto x = hologate::standard_gate(GateKind::pauli_x);
  const std::uint32_t n = 2, m = 1;
  auto f = HoloPoly::monomial(2, 4, {n, m});
  auto image = x.apply(f);
  for (std::uint32_t np = 0; np <= 3; ++np) {
    for (std::uint32_t mp = 0; mp + np <= 4; ++mp) {
      auto probe = HoloPoly::monomial(2, 4, {np, mp});
      const Complex element =
          hologate::inner_product(space, probe, image) /
          hologate::inner_product(space, probe, probe);
      double expected = 0.0;
      if (np == n + 1 && mp + 1 == m) expected = m;
      if (mp == m + 1 && np + 1 == n) expected = n;
      CHECK(std::abs(element - Complex{expected}) < 1e-12);
    }
  }
}

TEST_CASE("matrix products convert to composed operators on the basis") {
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::MatrixXcd m(2, 2), n(2, 2);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        m(r, c) = Complex{u(rng), u(rng)};
        n(r, c) = Complex{u(rng), u(rng)};
      }
    }
    auto combined = hologate::matrix_to_operator(m * n);
    auto lm = hologate::matrix_to_operator(m);
    auto ln = hologate::matrix_to_operator(n);
    for (std::uint32_t var : {0u, 1u}) {
      auto direct = combined.apply(basis1(2, var));
      auto staged = lm.apply(ln.apply(basis1(2, var)));
      CHECK(hologate::approx_equal(direct, staged, 1e-10));
    }
  }
}

TEST_CASE("involutions square to the identity on the single-excitation plane") {
  for (GateKind kind : {GateKind::pauli_x, GateKind::pauli_y,
                        GateKind::pauli_z, GateKind::hadamard}) {
    auto g = hologate::standard_gate(kind);
    auto gg = hologate::compose(g, g);
    for (std::uint32_t var : {0u, 1u}) {
      CHECK(hologate::approx_equal(gg.apply(basis1(2, var)), basis1(2, var),
                                   1e-12));
    }
  }
}

TEST_CASE("conjugating NOT by Hadamard gives the phase-difference gate") {
  auto h = hologate::standard_gate(GateKind::hadamard);
  auto x = hologate::standard_gate(GateKind::pauli_x);
  auto hxh = hologate::compose(h, hologate::compose(x, h));
  auto z = hologate::standard_gate(GateKind::pauli_z);
  for (std::uint32_t var : {0u, 1u}) {
    CHECK(hologate::approx_equal(hxh.apply(basis1(2, var)),
                                 z.apply(basis1(2, var)), 1e-12));
  }
}

TEST_CASE("commutators of hopping operators stay first order") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_first_order(rng, 3);
    auto b = random_first_order(rng, 3);
    CHECK(hologate::commutator(a, b).is_first_order());
  }
}

TEST_CASE("composition agrees with staged application") {
  std::mt19937 rng(808);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_first_order(rng, 2);
    auto b = random_first_order(rng, 2);
    auto f = random_state(rng, 2, 4, 5);
    auto direct = hologate::compose(a, b).apply(f);
    auto staged = a.apply(b.apply(f));
    CHECK(hologate::approx_equal(direct, staged, 1e-10));
  }
}

TEST_CASE("permutation gates shuffle the one-hot basis bijectively") {
  struct Entry {
    GateKind kind;
    std::uint32_t dim;
  };
  for (Entry entry : {Entry{GateKind::cnot, 4}, Entry{GateKind::swap, 4},
                      Entry{GateKind::toffoli, 8},
                      Entry{GateKind::fredkin, 8}}) {
    auto g = hologate::standard_gate(entry.kind);
    auto gg = hologate::compose(g, g);
    std::vector<bool> hit(entry.dim, false);
    for (std::uint32_t var = 0; var < entry.dim; ++var) {
      auto image = g.apply(basis1(entry.dim, var));
      REQUIRE(image.term_count() == 1);
      const auto& idx = image.terms().begin()->first;
      CHECK(image.terms().begin()->second == Complex{1.0, 0.0});
      CHECK(hologate::total_degree(idx) == 1);
      std::uint32_t target = 0;
      while (idx[target] == 0) ++target;
      CHECK_FALSE(hit[target]);
      hit[target] = true;
      CHECK(hologate::approx_equal(gg.apply(basis1(entry.dim, var)),
                                   basis1(entry.dim, var)));
    }
  }
}

TEST_CASE("oscillator energies climb in half-integer steps") {
  auto h = hologate::oscillator_hamiltonian();
  for (std::uint32_t n = 0; n <= 6; ++n) {
    auto f = HoloPoly::monomial(1, 6, {n});
    const double energy = static_cast<double>(n) + 0.5;
    CHECK(hologate::approx_equal(h.apply(f), f.scaled(energy)));
  }
}

TEST_CASE("z-rotations add their angles on single-excitation states") {
  auto a = hologate::standard_gate(GateSpec{GateKind::rotation_z, 0.7});
  auto b = hologate::standard_gate(GateSpec{GateKind::rotation_z, -1.9});
  auto sum = hologate::standard_gate(GateSpec{GateKind::rotation_z, -1.2});
  auto ab = hologate::compose(a, b);
  for (std::uint32_t var : {0u, 1u}) {
    CHECK(hologate::approx_equal(ab.apply(basis1(2, var)),
                                 sum.apply(basis1(2, var)), 1e-10));
  }
}

TEST_CASE("x- and y-rotations match their matrix forms") {
  const double theta = 1.234;
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Eigen::MatrixXcd rx(2, 2), ry(2, 2);
  rx << c, -kI * s, -kI * s, c;
  ry << c, -s, s, c;
  CHECK(hologate::approx_equal(
      hologate::standard_gate(GateSpec{GateKind::rotation_x, theta}),
      hologate::matrix_to_operator(rx)));
  CHECK(hologate::approx_equal(
      hologate::standard_gate(GateSpec{GateKind::rotation_y, theta}),
      hologate::matrix_to_operator(ry)));
}

TEST_CASE("gate parsing is case-insensitive and round-trips labels") {
  CHECK(hologate::parse_gate("x").kind == GateKind::pauli_x);
  CHECK(hologate::parse_gate("CNOT").kind == GateKind::cnot);
  CHECK(hologate::parse_gate("Toffoli").kind == GateKind::toffoli);
  auto rx = hologate::parse_gate("RX:0.5");
  CHECK(rx.kind == GateKind::rotation_x);
  CHECK(rx.angle == 0.5);
  auto id4 = hologate::parse_gate("i:4");
  CHECK(id4.kind == GateKind::identity);
  CHECK(id4.identity_dimension == 4);
  CHECK(hologate::gate_label(id4) == "I:4");
  CHECK(hologate::gate_label(hologate::parse_gate("I")) == "I");

  const GateSpec spin{GateKind::rotation_z, std::numbers::pi / 4.0};
  auto round_trip = hologate::parse_gate(hologate::gate_label(spin));
  CHECK(round_trip.angle == spin.angle);

  CHECK_THROWS_AS(hologate::parse_gate("q"), std::invalid_argument);
  CHECK_THROWS_AS(hologate::parse_gate("rx"), std::invalid_argument);
  CHECK_THROWS_AS(hologate::parse_gate("rx:abc"), std::invalid_argument);
  CHECK_THROWS_AS(hologate::parse_gate("x:1"), std::invalid_argument);
  CHECK_THROWS_AS(hologate::parse_gate("i:0"), std::invalid_argument);
}

TEST_CASE("contour application of NOT doubles up the pair state") {
  auto x = hologate::standard_gate(GateKind::pauli_x);
  auto f = HoloPoly::monomial(2, 2, {1, 1});
  auto via_contour = hologate::apply_via_cauchy(x, f, 1.0, 64);
  auto direct = x.apply(f);
  CHECK(hologate::approx_equal(via_contour, direct, 1e-8));
}

TEST_CASE("contour application of the identity reconstructs the state") {
  auto id = hologate::standard_gate(GateKind::identity);
  auto f = basis1(2, 0).with_max_degree(1);
  CHECK(hologate::approx_equal(hologate::apply_via_cauchy(id, f, 1.0, 64), f,
                               1e-10));
}

TEST_CASE("contour application matches the symbolic image of Y") {
  auto y = hologate::standard_gate(GateKind::pauli_y);
  auto f = basis1(2, 0).with_max_degree(1);
  auto expected = basis1(2, 1).with_max_degree(1).scaled(kI);
  CHECK(hologate::approx_equal(hologate::apply_via_cauchy(y, f, 1.0, 64),
                               expected, 1e-8));
}

TEST_CASE("contour application enforces node floors") {
  auto x = hologate::standard_gate(GateKind::pauli_x);
  auto shallow = HoloPoly::monomial(2, 2, {1, 1});
  CHECK_THROWS_AS(hologate::apply_via_cauchy(x, shallow, 1.0, 8),
                  std::invalid_argument);
  auto deep = HoloPoly::monomial(2, 7, {4, 3});
  CHECK_THROWS_AS(hologate::apply_via_cauchy(x, deep, 1.0, 16),
                  hologate::aliasing_error);
  auto second_order = hologate::compose(x, x);
  CHECK_THROWS_AS(hologate::apply_via_cauchy(second_order, shallow, 1.0, 64),
                  std::invalid_argument);
}

TEST_CASE("contour application tracks random hopping operators") {
  std::mt19937 rng(1618);
  for (int trial = 0; trial < 10; ++trial) {
    auto op = random_first_order(rng, 2);
    auto f = random_state(rng, 2, 3, 4);
    auto via_contour = hologate::apply_via_cauchy(op, f, 0.8, 64);
    CHECK(hologate::approx_equal(via_contour, op.apply(f), 1e-8));
  }
}
