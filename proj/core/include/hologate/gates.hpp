#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "hologate/bargmann.hpp"
#include "hologate/diff_op.hpp"

namespace hologate {

enum class GateKind {
  pauli_x,
  pauli_y,
  pauli_z,
  identity,
  hadamard,
  phase_s,
  rotation_x,
  rotation_y,
  rotation_z,
  cnot,
  swap,
  toffoli,
  fredkin,
};

// A gate name plus its parameters: the rotation angle in radians for
// Rx/Ry/Rz, the variable count for the identity family.
struct GateSpec {
  GateKind kind;
  double angle = 0.0;
  std::uint32_t identity_dimension = 2;
};

// Accepts case-insensitive names: "X", "h", "CNOT", "Rx:0.785", "I:4".
// Rotation gates require an angle after the colon; the identity takes an
// optional variable count.
GateSpec parse_gate(std::string_view text);

// Canonical label, e.g. "X", "Rz:1.5707963267948966", "I:4". Parsing the
// label gives back an equal GateSpec.
std::string gate_label(const GateSpec& spec);

// The operator realizing the gate: single-qubit gates act on two variables,
// CNOT and SWAP on four, Toffoli and Fredkin on eight. Fredkin carries the
// z6 d6 term so that it permutes the basis monomials bijectively.
DiffOp standard_gate(const GateSpec& spec);
DiffOp standard_gate(GateKind kind);

// Sum of M(j,k) z_j d_k over all entries: the left-multiplication
// representation of a square matrix on the single-excitation subspace.
DiffOp matrix_to_operator(const Eigen::MatrixXcd& m);

enum class ExpectationMode {
  // <f|L f> / <f|f>: scale-invariant.
  normalized,
  // <f|L f> / sqrt(<f|f>): matches the source convention.
  square_root,
};

Complex expectation(const BargmannSpace& space, const DiffOp& op,
                    const HoloPoly& f,
                    ExpectationMode mode = ExpectationMode::normalized);

enum class SpinComponent { x, y, z, squared_total };

// Two-oscillator spin operators: sigma_x = z1 d2 + z2 d1,
// sigma_y = -i (z1 d2 - z2 d1), sigma_z = z1 d1 - z2 d2. The squared total
// is Jx Jx + Jy Jy + Jz Jz built from the halved generators J = sigma / 2;
// it is diagonal on monomials with eigenvalue (N/2)(N/2+1) at total
// degree N.
DiffOp jordan_schwinger(SpinComponent component);

// Single-mode oscillator Hamiltonian z d + 1/2, with eigenvalue n + 1/2
// on z^n.
DiffOp oscillator_hamiltonian();

// The derivative of f in one variable, reconstructed from circular contour
// quadrature around a lattice of evaluation points instead of term-by-term
// differentiation. Node counts below 2 (max_degree + 2) alias and are
// rejected.
HoloPoly derivative_via_contour(const HoloPoly& f, std::uint32_t variable,
                                double radius, std::size_t nodes);

// Applies a strictly first-order operator with every derivative taken by
// contour quadrature. Agrees with DiffOp::apply to 1e-8 per coefficient.
HoloPoly apply_via_cauchy(const DiffOp& op, const HoloPoly& f, double radius,
                          std::size_t nodes);

}  // namespace hologate
