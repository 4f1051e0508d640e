#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "hologate/multi_index.hpp"
#include "hologate/numeric.hpp"

namespace hologate {

// Tolerance for coefficient-wise comparison of two polynomials.
inline constexpr double kCoeffTol = 1e-12;

/**
 * Sparse truncated multivariate power series over complex coefficients.
 *
 * A value holds its ambient dimension d, a total-degree bound D and a sorted
 * map from exponent vectors to nonzero coefficients. Every stored index has
 * length d and total degree <= D; coefficients that become exactly zero are
 * dropped. Exceeding D is an error, never a silent truncation.
 *
 * Values are immutable after construction; all operations return new values
 * and are safe to call concurrently.
 */
class HoloPoly {
 public:
  using TermMap = std::map<MultiIndex, Complex>;

  HoloPoly(std::uint32_t dimension, std::uint32_t max_degree);

  // Builds a polynomial from (index, coefficient) entries. Duplicate indices
  // are summed and zero coefficients dropped.
  static HoloPoly from_terms(
      std::uint32_t dimension, std::uint32_t max_degree,
      const std::vector<std::pair<MultiIndex, Complex>>& entries);

  static HoloPoly monomial(std::uint32_t dimension, std::uint32_t max_degree,
                           const MultiIndex& index, Complex coeff = 1.0);

  static HoloPoly constant(std::uint32_t dimension, std::uint32_t max_degree,
                           Complex value);

  std::uint32_t dimension() const { return dimension_; }
  std::uint32_t max_degree() const { return max_degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Coefficient at the given index, zero if absent.
  Complex coefficient(const MultiIndex& index) const;

  // d/dz_i term by term.
  HoloPoly partial_derivative(std::uint32_t variable) const;

  // Multiplication by z_i; degree bound violations raise
  // degree_overflow_error naming the offending index.
  HoloPoly multiply_by_variable(std::uint32_t variable) const;

  Complex evaluate(std::span<const Complex> point) const;
  Complex evaluate(const std::vector<Complex>& point) const {
    return evaluate(std::span<const Complex>(point));
  }

  HoloPoly scaled(Complex factor) const;

  // Same terms under a new degree bound; existing terms must fit.
  HoloPoly with_max_degree(std::uint32_t max_degree) const;

  // Largest coefficient magnitude; zero for the zero polynomial.
  double max_coefficient_magnitude() const;

 private:
  std::uint32_t dimension_;
  std::uint32_t max_degree_;
  TermMap terms_;

  void insert_term(const MultiIndex& index, Complex coeff);
  void check_index(const MultiIndex& index) const;
};

// Coefficient-wise linear combination; all polynomials must share dimension
// and degree bound.
HoloPoly linear_combine(std::span<const Complex> coeffs,
                        std::span<const HoloPoly> polys);
HoloPoly add(const HoloPoly& f, const HoloPoly& g);

// Polynomial product. The result bound defaults to the sum of the operand
// bounds so that no valid product can overflow.
HoloPoly multiply(const HoloPoly& f, const HoloPoly& g,
                  std::optional<std::uint32_t> result_max_degree = {});

// Re-indexes f into a larger ambient space: variable i of f becomes
// variable_map[i] of the result.
HoloPoly embed(const HoloPoly& f, std::uint32_t new_dimension,
               const std::vector<std::uint32_t>& variable_map);

bool approx_equal(const HoloPoly& f, const HoloPoly& g,
                  double tol = kCoeffTol);

// Split of the variable set into two disjoint groups covering all of it.
struct VariablePartition {
  std::vector<std::uint32_t> group_a;
  std::vector<std::uint32_t> group_b;
};

// Coefficients arranged as a matrix indexed by (index restricted to A,
// index restricted to B), with the restricted indices listed in sorted order.
struct CoefficientMatrix {
  Eigen::MatrixXcd matrix;
  std::vector<MultiIndex> row_indices;
  std::vector<MultiIndex> col_indices;
};

CoefficientMatrix coefficient_matrix(const HoloPoly& f,
                                     const VariablePartition& partition);

// True iff the coefficient matrix is numerically rank one: the second
// singular value is at most tol times the largest. Rejects the zero
// polynomial.
bool is_product_state(const HoloPoly& f, const VariablePartition& partition,
                      double tol);

// Human-readable rendering, e.g. "z1^2+z2^2" or "2z1z2"; "0" for the zero
// polynomial. Terms appear in descending lexicographic index order.
std::string to_string(const HoloPoly& f);

}  // namespace hologate
