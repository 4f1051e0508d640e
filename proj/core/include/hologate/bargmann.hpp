#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hologate/holo_poly.hpp"
#include "hologate/numeric.hpp"

namespace hologate {

/**
 * The Hilbert space of holomorphic functions square-integrable against the
 * Gaussian weight e^{-|z|^2/t} on C^d, normalized so that the monomials
 * z^a / sqrt(a! t^|a|) are an orthonormal basis. The scale t plays the role
 * of Planck's constant for quantized states.
 */
struct BargmannSpace {
  BargmannSpace(std::uint32_t dimension, double t);

  std::uint32_t dimension;
  double t;
};

// Tensor-product polar quadrature: Gauss-Legendre nodes on [0, R] in each
// radius, equally spaced angles. The same rule is reused for every variable.
struct QuadratureGrid {
  QuadratureGrid(std::size_t radial_nodes, std::size_t angular_nodes,
                 double radial_cutoff);

  std::size_t radial_nodes;
  std::size_t angular_nodes;
  double radial_cutoff;

  // 128 x 128 nodes with cutoff 10 sqrt(t), ample for low-degree states.
  static QuadratureGrid standard(const BargmannSpace& space);
};

// Gauss-Legendre nodes and weights on [a, b].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(std::size_t count, double a, double b);

// Exact pairing, conjugate-linear in f: monomials satisfy
// <z^a, z^b> = delta_ab a! t^|a|.
Complex inner_product(const BargmannSpace& space, const HoloPoly& f,
                      const HoloPoly& g);

// The same pairing by numerical integration against the Gaussian weight.
// Kept as an independent cross-check of the closed-form rule.
Complex inner_product_quadrature(const BargmannSpace& space,
                                 const HoloPoly& f, const HoloPoly& g,
                                 const QuadratureGrid& grid);

// Reproducing kernel K(z, w) = e^{z . conj(w) / t}.
Complex kernel_eval(const BargmannSpace& space, std::span<const Complex> z,
                    std::span<const Complex> w);

// Integral of K(z, w) f(w) against the Gaussian weight in w; reproduces
// f(z) up to quadrature error.
Complex kernel_reproduce(const BargmannSpace& space, const HoloPoly& f,
                         std::span<const Complex> z,
                         const QuadratureGrid& grid);

// Integral of K(z, u) K(u, w) over u; equals K(z, w) up to quadrature error.
Complex kernel_semigroup_quadrature(const BargmannSpace& space,
                                    std::span<const Complex> z,
                                    std::span<const Complex> w,
                                    const QuadratureGrid& grid);

// A real-line quadrature rule together with function values sampled on it.
struct RealLineSamples {
  std::vector<double> points;
  std::vector<double> weights;
  std::vector<Complex> values;
};

// Composite trapezoid rule on [a, b] with the given number of points.
RealLineSamples sampled_on_uniform_rule(
    double a, double b, std::size_t count,
    const std::function<Complex(double)>& f);

// Maps a sampled real-line function into the holomorphic representation,
// evaluated at the point z:
//   (pi t)^{-1/4} integral of e^{(-z^2 + 2 sqrt(2) z x - x^2) / 2t} f(x) dx.
// The sample rule must reach far enough that the Gaussian envelope at its
// endpoints is below 1e-12.
Complex sb_transform(const BargmannSpace& space, const RealLineSamples& samples,
                     Complex z);

// Order-n derivative data of a one-variable state at z0, phrased as the
// pairing of f against (z - z0)^n in the basis recentred at z0. Equals
// n! t^n times the degree-n coefficient of the shifted expansion, which for
// t = 1 is exactly the n-th derivative of f at z0.
Complex derivative_at(const BargmannSpace& space, const HoloPoly& f,
                      std::uint32_t order, Complex z0);

// One-sided difference quotients: order 1 is (f(z0+h) - f(z0)) / h and
// order 2 is (f(z0+2h) - 2 f(z0+h) + f(z0)) / h^2.
Complex forward_difference(const std::function<Complex(Complex)>& f,
                           Complex z0, Complex h, int order);

// Degree-n series coefficient ratio of the generalized hypergeometric
// function: the Pochhammer product over upper parameters divided by the
// product over lower parameters. Cross-checked against pairing z^n with the
// truncated series; disagreement beyond 1e-10 relative is an error.
double hypergeometric_coefficient(std::span<const double> p_params,
                                  std::span<const double> q_params,
                                  std::uint32_t order);

}  // namespace hologate
