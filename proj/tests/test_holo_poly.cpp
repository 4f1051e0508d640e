#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/SVD>

#include "hologate/errors.hpp"
#include "hologate/holo_poly.hpp"

using hologate::Complex;
using hologate::HoloPoly;
using hologate::MultiIndex;
using hologate::VariablePartition;

namespace {

HoloPoly random_poly(std::mt19937& rng, std::uint32_t d, std::uint32_t D,
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

TEST_CASE("from_terms builds the two-mode pair state") {
  auto f = HoloPoly::from_terms(2, 2, {{{1, 1}, 1.0}});
  CHECK(f.term_count() == 1);
  CHECK(f.coefficient({1, 1}) == Complex{1.0, 0.0});
  CHECK(hologate::to_string(f) == "z1z2");
}

TEST_CASE("from_terms with no entries is the zero polynomial") {
  auto f = HoloPoly::from_terms(1, 3, {});
  CHECK(f.is_zero());
  CHECK(hologate::to_string(f) == "0");
}

TEST_CASE("from_terms cancels duplicate indices to zero") {
  auto f = HoloPoly::from_terms(2, 2, {{{1, 0}, 1.0}, {{1, 0}, -1.0}});
  CHECK(f.is_zero());
}

TEST_CASE("from_terms sums duplicate indices") {
  auto f = HoloPoly::from_terms(2, 3, {{{2, 0}, 1.5}, {{2, 0}, 0.5}});
  CHECK(f.coefficient({2, 0}) == Complex{2.0, 0.0});
}

TEST_CASE("from_terms rejects wrong index length") {
  CHECK_THROWS_AS(HoloPoly::from_terms(2, 2, {{{1}, 1.0}}),
                  hologate::dimension_error);
}

TEST_CASE("from_terms reports the index that overflows the bound") {
  try {
    HoloPoly::from_terms(2, 2, {{{2, 1}, 1.0}});
    FAIL("expected degree_overflow_error");
  } catch (const hologate::degree_overflow_error& e) {
    CHECK(e.index == MultiIndex{2, 1});
  }
}

TEST_CASE("linear_combine adds basis monomials") {
  auto z1 = HoloPoly::monomial(2, 2, {1, 0});
  auto z2 = HoloPoly::monomial(2, 2, {0, 1});
  auto f = hologate::add(z1, z2);
  CHECK(f.coefficient({1, 0}) == Complex{1.0, 0.0});
  CHECK(f.coefficient({0, 1}) == Complex{1.0, 0.0});
  CHECK(hologate::to_string(f) == "z1+z2");
}

TEST_CASE("linear_combine cancels a state against itself") {
  auto f = HoloPoly::from_terms(2, 3, {{{1, 0}, {0.5, 1.0}}, {{1, 2}, 2.0}});
  const Complex weights[2] = {1.0, -1.0};
  const HoloPoly operands[2] = {f, f};
  CHECK(hologate::linear_combine(weights, operands).is_zero());
}

TEST_CASE("equal-weight superposition matches the Hadamard image of z1") {
  const double r = 1.0 / std::sqrt(2.0);
  auto z1 = HoloPoly::monomial(2, 2, {1, 0});
  auto z2 = HoloPoly::monomial(2, 2, {0, 1});
  const Complex weights[2] = {r, r};
  const HoloPoly operands[2] = {z1, z2};
  auto f = hologate::linear_combine(weights, operands);
  CHECK(std::abs(f.coefficient({1, 0}) - Complex{r}) < 1e-15);
  CHECK(std::abs(f.coefficient({0, 1}) - Complex{r}) < 1e-15);
}

TEST_CASE("linear_combine rejects mismatched shapes") {
  auto a = HoloPoly::monomial(2, 2, {1, 0});
  auto b = HoloPoly::monomial(2, 3, {0, 1});
  const Complex weights[2] = {1.0, 1.0};
  const HoloPoly operands[2] = {a, b};
  CHECK_THROWS_AS(hologate::linear_combine(weights, operands),
                  hologate::dimension_error);
}

TEST_CASE("partial derivative of the pair state") {
  auto f = HoloPoly::monomial(2, 2, {1, 1});
  auto df = f.partial_derivative(0);
  CHECK(hologate::approx_equal(df, HoloPoly::monomial(2, 2, {0, 1})));
}

TEST_CASE("partial derivative in an absent variable vanishes") {
  auto f = HoloPoly::monomial(2, 2, {2, 0});
  CHECK(f.partial_derivative(1).is_zero());
}

TEST_CASE("partial derivative applies the power rule") {
  auto f = HoloPoly::monomial(1, 3, {3});
  auto df = f.partial_derivative(0);
  CHECK(df.coefficient({2}) == Complex{3.0, 0.0});
  CHECK(hologate::to_string(df) == "3z1^2");
}

TEST_CASE("partial derivative rejects out-of-range variables") {
  auto f = HoloPoly::monomial(2, 2, {1, 0});
  CHECK_THROWS_AS(f.partial_derivative(2), hologate::dimension_error);
}

TEST_CASE("multiply_by_variable raises the exponent") {
  auto z2 = HoloPoly::monomial(2, 2, {0, 1});
  CHECK(hologate::approx_equal(z2.multiply_by_variable(0),
                               HoloPoly::monomial(2, 2, {1, 1})));
  auto one = HoloPoly::constant(2, 2, 1.0);
  CHECK(hologate::approx_equal(one.multiply_by_variable(0),
                               HoloPoly::monomial(2, 2, {1, 0})));
}

TEST_CASE("multiply_by_variable refuses to exceed the degree bound") {
  auto z2 = HoloPoly::monomial(2, 1, {0, 1});
  CHECK_THROWS_AS(z2.multiply_by_variable(1),
                  hologate::degree_overflow_error);
}

TEST_CASE("evaluate multiplies out a monomial") {
  auto f = HoloPoly::monomial(2, 2, {1, 1});
  CHECK(f.evaluate({Complex{2.0}, Complex{3.0}}) == Complex{6.0, 0.0});
}

TEST_CASE("evaluate of the zero polynomial is zero everywhere") {
  auto f = HoloPoly::from_terms(2, 2, {});
  CHECK(f.evaluate({Complex{5.0, -1.0}, Complex{0.1, 7.0}}) ==
        Complex{0.0, 0.0});
}

TEST_CASE("evaluate finds the zero of z1^2+z2^2 at (1, i)") {
  auto f = HoloPoly::from_terms(2, 2, {{{2, 0}, 1.0}, {{0, 2}, 1.0}});
  auto v = f.evaluate({Complex{1.0}, hologate::kImaginaryUnit});
  CHECK(std::abs(v) < 1e-15);
  CHECK(hologate::to_string(f) == "z1^2+z2^2");
}

TEST_CASE("evaluate rejects points of the wrong length") {
  auto f = HoloPoly::monomial(2, 2, {1, 0});
  std::vector<Complex> p{Complex{1.0}};
  CHECK_THROWS_AS(f.evaluate(p), hologate::dimension_error);
}

TEST_CASE("coefficient matrix of the pair state is the 1x1 identity") {
  auto f = HoloPoly::monomial(2, 2, {1, 1});
  auto cm = hologate::coefficient_matrix(f, VariablePartition{{0}, {1}});
  REQUIRE(cm.matrix.rows() == 1);
  REQUIRE(cm.matrix.cols() == 1);
  CHECK(cm.matrix(0, 0) == Complex{1.0, 0.0});
  CHECK(cm.row_indices == std::vector<MultiIndex>{{1}});
  CHECK(cm.col_indices == std::vector<MultiIndex>{{1}});
}

TEST_CASE("coefficient matrix of z1^2+z2^2 is antidiagonal") {
  auto f = HoloPoly::from_terms(2, 2, {{{2, 0}, 1.0}, {{0, 2}, 1.0}});
  auto cm = hologate::coefficient_matrix(f, VariablePartition{{0}, {1}});
  REQUIRE(cm.matrix.rows() == 2);
  REQUIRE(cm.matrix.cols() == 2);
  CHECK(cm.row_indices == std::vector<MultiIndex>{{0}, {2}});
  CHECK(cm.col_indices == std::vector<MultiIndex>{{0}, {2}});
  CHECK(cm.matrix(1, 0) == Complex{1.0, 0.0});
  CHECK(cm.matrix(0, 1) == Complex{1.0, 0.0});
  CHECK(cm.matrix(0, 0) == Complex{0.0, 0.0});
  CHECK(cm.matrix(1, 1) == Complex{0.0, 0.0});
}

TEST_CASE("coefficient matrix of z1+z2 has two entries of full rank") {
  auto f = HoloPoly::from_terms(2, 2, {{{1, 0}, 1.0}, {{0, 1}, 1.0}});
  auto cm = hologate::coefficient_matrix(f, VariablePartition{{0}, {1}});
  REQUIRE(cm.matrix.rows() == 2);
  REQUIRE(cm.matrix.cols() == 2);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(cm.matrix);
  CHECK(svd.singularValues()(1) > 0.5);
}

TEST_CASE("coefficient matrix rejects invalid partitions") {
  auto f = HoloPoly::monomial(2, 2, {1, 1});
  CHECK_THROWS_AS(
      hologate::coefficient_matrix(f, VariablePartition{{0}, {0}}),
      hologate::dimension_error);
  CHECK_THROWS_AS(hologate::coefficient_matrix(f, VariablePartition{{0}, {}}),
                  hologate::dimension_error);
  CHECK_THROWS_AS(
      hologate::coefficient_matrix(f, VariablePartition{{0}, {2}}),
      hologate::dimension_error);
}

TEST_CASE("pair state factorizes across the mode split") {
  auto f = HoloPoly::monomial(2, 2, {1, 1});
  CHECK(hologate::is_product_state(f, VariablePartition{{0}, {1}}, 1e-10));
}

TEST_CASE("correlated two-term state does not factorize") {
  auto f = HoloPoly::from_terms(2, 4, {{{1, 1}, 1.0}, {{2, 2}, 1.0}});
  CHECK_FALSE(
      hologate::is_product_state(f, VariablePartition{{0}, {1}}, 1e-10));
}

TEST_CASE("product test ignores overall scale") {
  for (Complex alpha : {Complex{3.0, 0.0}, Complex{0.0, -2.0},
                        Complex{1e-6, 1e-6}}) {
    auto f = HoloPoly::monomial(2, 2, {1, 1}, alpha);
    CHECK(hologate::is_product_state(f, VariablePartition{{0}, {1}}, 1e-10));
  }
}

TEST_CASE("product test rejects the zero state") {
  auto f = HoloPoly::from_terms(2, 2, {});
  CHECK_THROWS_AS(
      hologate::is_product_state(f, VariablePartition{{0}, {1}}, 1e-10),
      hologate::zero_state_error);
}

TEST_CASE("derivative and multiplication obey the canonical commutator") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 25; ++trial) {
    auto f = random_poly(rng, 2, 3, 4);
    auto bounded = f.with_max_degree(4);
    for (std::uint32_t i = 0; i < 2; ++i) {
      for (std::uint32_t j = 0; j < 2; ++j) {
        auto lhs = bounded.multiply_by_variable(j).partial_derivative(i);
        auto rhs = bounded.partial_derivative(i).multiply_by_variable(j);
        const Complex weights[2] = {1.0, -1.0};
        const HoloPoly operands[2] = {lhs, rhs};
        auto comm = hologate::linear_combine(weights, operands);
        if (i == j) {
          CHECK(hologate::approx_equal(comm, bounded));
        } else {
          CHECK(comm.is_zero());
        }
      }
    }
  }
}

TEST_CASE("linear combinations commute and associate") {
  std::mt19937 rng(7);
  auto f = random_poly(rng, 2, 3, 3);
  auto g = random_poly(rng, 2, 3, 3);
  auto h = random_poly(rng, 2, 3, 3);
  CHECK(hologate::approx_equal(hologate::add(f, g), hologate::add(g, f)));
  CHECK(hologate::approx_equal(hologate::add(hologate::add(f, g), h),
                               hologate::add(f, hologate::add(g, h))));
}

TEST_CASE("evaluation is linear in the state") {
  std::mt19937 rng(11);
  auto f = random_poly(rng, 2, 3, 4);
  auto g = random_poly(rng, 2, 3, 4);
  const Complex a{0.7, -0.3};
  const Complex b{-1.2, 0.4};
  const Complex weights[2] = {a, b};
  const HoloPoly operands[2] = {f, g};
  auto combo = hologate::linear_combine(weights, operands);
  std::vector<Complex> p{Complex{0.4, 0.9}, Complex{-1.1, 0.2}};
  auto direct = combo.evaluate(p);
  auto split = a * f.evaluate(p) + b * g.evaluate(p);
  CHECK(std::abs(direct - split) <= 1e-12 * (1.0 + std::abs(split)));
}

TEST_CASE("multiply expands products term by term") {
  auto f = HoloPoly::from_terms(2, 1, {{{1, 0}, 1.0}, {{0, 1}, 1.0}});
  auto p = hologate::multiply(f, f);
  CHECK(p.max_degree() == 2);
  CHECK(p.coefficient({2, 0}) == Complex{1.0, 0.0});
  CHECK(p.coefficient({1, 1}) == Complex{2.0, 0.0});
  CHECK(p.coefficient({0, 2}) == Complex{1.0, 0.0});
  CHECK(hologate::to_string(p) == "z1^2+2z1z2+z2^2");
}

TEST_CASE("embed relocates variables into a larger space") {
  auto f = HoloPoly::from_terms(1, 2, {{{2}, {0.0, 1.0}}});
  auto g = hologate::embed(f, 3, {2});
  CHECK(g.dimension() == 3);
  CHECK(g.coefficient({0, 0, 2}) == Complex{0.0, 1.0});
  CHECK_THROWS_AS(hologate::embed(f, 3, {3}), hologate::dimension_error);
  CHECK_THROWS_AS(hologate::embed(f, 3, {0, 1}), hologate::dimension_error);
}

TEST_CASE("approx_equal tolerates only small coefficient drift") {
  auto f = HoloPoly::monomial(2, 2, {1, 0});
  auto g = HoloPoly::monomial(2, 2, {1, 0}, Complex{1.0 + 5e-13, 0.0});
  auto h = HoloPoly::monomial(2, 2, {1, 0}, Complex{1.0 + 5e-11, 0.0});
  CHECK(hologate::approx_equal(f, g));
  CHECK_FALSE(hologate::approx_equal(f, h));
}

TEST_CASE("rendering covers signs, units and mixed coefficients") {
  auto f = HoloPoly::from_terms(
      2, 3, {{{2, 1}, -1.0}, {{1, 0}, {0.0, 1.0}}, {{0, 0}, {2.0, -1.0}}});
  CHECK(hologate::to_string(f) == "-z1^2z2+iz1+(2-i)");
  auto g = HoloPoly::monomial(2, 2, {1, 1}, 2.0);
  CHECK(hologate::to_string(g) == "2z1z2");
}
