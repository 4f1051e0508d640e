#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "hologate/holo_poly.hpp"
#include "hologate/multi_index.hpp"
#include "hologate/numeric.hpp"

namespace hologate {

// One normal-ordered Weyl-algebra word: multiply by z^creation after taking
// the mixed partial derivative of order annihilation.
struct OpTermKey {
  MultiIndex creation;
  MultiIndex annihilation;

  friend bool operator==(const OpTermKey&, const OpTermKey&) = default;
  friend bool operator<(const OpTermKey& a, const OpTermKey& b) {
    return std::tie(a.creation, a.annihilation) <
           std::tie(b.creation, b.annihilation);
  }
};

/**
 * A differential operator sum c_{ab} z^a d^b in normal order: every
 * multiplication stands left of every derivative. Normal order makes the
 * representation unique, so operator equality is coefficient equality.
 *
 * Gates are first-order instances (one z, one d per term); products of
 * gates and the squared spin operator are second-order. Values are
 * immutable and freely shareable.
 */
class DiffOp {
 public:
  using TermMap = std::map<OpTermKey, Complex>;

  explicit DiffOp(std::uint32_t dimension);

  static DiffOp from_terms(
      std::uint32_t dimension,
      const std::vector<std::tuple<MultiIndex, MultiIndex, Complex>>& terms);

  // The single word c z^creation d^annihilation.
  static DiffOp word(std::uint32_t dimension, const MultiIndex& creation,
                     const MultiIndex& annihilation, Complex coeff = 1.0);

  std::uint32_t dimension() const { return dimension_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // True when every term multiplies by exactly one variable and
  // differentiates in exactly one.
  bool is_first_order() const;

  HoloPoly apply(const HoloPoly& f) const;

 private:
  std::uint32_t dimension_;
  TermMap terms_;

  void insert_term(const MultiIndex& creation, const MultiIndex& annihilation,
                   Complex coeff);
};

DiffOp add(const DiffOp& a, const DiffOp& b);
DiffOp subtract(const DiffOp& a, const DiffOp& b);
DiffOp scaled(const DiffOp& op, Complex factor);

// Operator product a after b, rewritten to normal order with the
// commutation rule d_i z_j = z_j d_i + delta_ij.
DiffOp compose(const DiffOp& a, const DiffOp& b);

// Copy without the terms of magnitude at most tol.
DiffOp pruned(const DiffOp& op, double tol);

// compose(a, b) - compose(b, a), with rounding residue of the cancelled
// higher-order words pruned relative to the composition magnitudes.
DiffOp commutator(const DiffOp& a, const DiffOp& b);

bool approx_equal(const DiffOp& a, const DiffOp& b, double tol = kCoeffTol);

std::string to_string(const DiffOp& op);

}  // namespace hologate
