#include "hologate/bargmann.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hologate/errors.hpp"

namespace hologate {

namespace {

constexpr double kPi = std::numbers::pi;

// Per-variable quadrature nodes in polar form, with the Gaussian weight,
// the polar Jacobian and the normalization (pi t)^{-1} folded into each
// node weight.
struct PolarRule {
  std::vector<double> radius;
  std::vector<double> radial_weight;  // includes r e^{-r^2/t} / (pi t)
  std::vector<double> angle;
  double angle_weight;
};

PolarRule make_polar_rule(const BargmannSpace& space,
                          const QuadratureGrid& grid) {
  PolarRule rule;
  GaussLegendreRule gl =
      gauss_legendre(grid.radial_nodes, 0.0, grid.radial_cutoff);
  rule.radius = gl.nodes;
  rule.radial_weight.resize(gl.nodes.size());
  for (std::size_t j = 0; j < gl.nodes.size(); ++j) {
    const double r = gl.nodes[j];
    rule.radial_weight[j] =
        gl.weights[j] * r * std::exp(-r * r / space.t) / (kPi * space.t);
  }
  rule.angle.resize(grid.angular_nodes);
  for (std::size_t m = 0; m < grid.angular_nodes; ++m) {
    rule.angle[m] =
        2.0 * kPi * static_cast<double>(m) / static_cast<double>(grid.angular_nodes);
  }
  rule.angle_weight = 2.0 * kPi / static_cast<double>(grid.angular_nodes);
  return rule;
}

// Quadrature value of the one-variable pairing <z^a, z^b>; the full
// tensor-product sum over C^d factorizes into these because every
// integrand term is a product of single-variable monomials.
Complex monomial_pair_integral(const PolarRule& rule, std::uint32_t a,
                               std::uint32_t b) {
  double radial = 0.0;
  const auto power = static_cast<double>(a + b);
  for (std::size_t j = 0; j < rule.radius.size(); ++j) {
    radial += rule.radial_weight[j] * std::pow(rule.radius[j], power);
  }
  Complex angular{0.0, 0.0};
  const double k = static_cast<double>(b) - static_cast<double>(a);
  for (double theta : rule.angle) {
    angular += std::polar(1.0, k * theta);
  }
  return radial * rule.angle_weight * angular;
}

void check_space_dims(const BargmannSpace& space, const HoloPoly& f) {
  if (f.dimension() != space.dimension) {
    throw dimension_error("state dimension does not match the space");
  }
}

double index_factorial(const MultiIndex& idx) {
  double out = 1.0;
  for (std::uint32_t a : idx) out *= factorial(a);
  return out;
}

Complex int_pow(Complex base, std::uint32_t exponent) {
  Complex out{1.0, 0.0};
  for (std::uint32_t k = 0; k < exponent; ++k) out *= base;
  return out;
}

}  // namespace

BargmannSpace::BargmannSpace(std::uint32_t dimension_, double t_)
    : dimension(dimension_), t(t_) {
  if (dimension == 0) {
    throw dimension_error("space dimension must be positive");
  }
  if (!(t > 0.0)) {
    throw std::invalid_argument("scale parameter t must be positive");
  }
}

QuadratureGrid::QuadratureGrid(std::size_t radial_nodes_,
                               std::size_t angular_nodes_,
                               double radial_cutoff_)
    : radial_nodes(radial_nodes_),
      angular_nodes(angular_nodes_),
      radial_cutoff(radial_cutoff_) {
  if (radial_nodes < 4 || angular_nodes < 4) {
    throw std::invalid_argument("quadrature grid needs at least 4 nodes per axis");
  }
  if (!(radial_cutoff > 0.0)) {
    throw std::invalid_argument("radial cutoff must be positive");
  }
}

QuadratureGrid QuadratureGrid::standard(const BargmannSpace& space) {
  return QuadratureGrid(128, 128, 10.0 * std::sqrt(space.t));
}

GaussLegendreRule gauss_legendre(std::size_t count, double a, double b) {
  if (count == 0) throw std::invalid_argument("empty quadrature rule");
  GaussLegendreRule rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  const auto n = static_cast<double>(count);
  for (std::size_t i = 0; i < count; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(kPi * (static_cast<double>(i) + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= count; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = 0.5 * (b - a) * x + 0.5 * (a + b);
    rule.weights[i] =
        (b - a) / ((1.0 - x * x) * dp * dp);
  }
  std::reverse(rule.nodes.begin(), rule.nodes.end());
  std::reverse(rule.weights.begin(), rule.weights.end());
  return rule;
}

Complex inner_product(const BargmannSpace& space, const HoloPoly& f,
                      const HoloPoly& g) {
  check_space_dims(space, f);
  check_space_dims(space, g);
  Complex total{0.0, 0.0};
  for (const auto& [index, cf] : f.terms()) {
    const Complex cg = g.coefficient(index);
    if (cg == Complex{0.0, 0.0}) continue;
    total += std::conj(cf) * cg * index_factorial(index) *
             std::pow(space.t, static_cast<double>(total_degree(index)));
  }
  return total;
}

Complex inner_product_quadrature(const BargmannSpace& space,
                                 const HoloPoly& f, const HoloPoly& g,
                                 const QuadratureGrid& grid) {
  check_space_dims(space, f);
  check_space_dims(space, g);
  const PolarRule rule = make_polar_rule(space, grid);

  // Cache the per-variable pair integrals that actually occur.
  const std::uint32_t max_pow = std::max(f.max_degree(), g.max_degree());
  std::vector<Complex> table((max_pow + 1) * (max_pow + 1));
  std::vector<bool> ready(table.size(), false);
  auto pair_value = [&](std::uint32_t a, std::uint32_t b) {
    const std::size_t slot = a * (max_pow + 1) + b;
    if (!ready[slot]) {
      table[slot] = monomial_pair_integral(rule, a, b);
      ready[slot] = true;
    }
    return table[slot];
  };

  Complex total{0.0, 0.0};
  for (const auto& [ia, ca] : f.terms()) {
    for (const auto& [ib, cb] : g.terms()) {
      Complex factor = std::conj(ca) * cb;
      for (std::uint32_t i = 0; i < space.dimension; ++i) {
        factor *= pair_value(ia[i], ib[i]);
      }
      total += factor;
    }
  }
  return total;
}

Complex kernel_eval(const BargmannSpace& space, std::span<const Complex> z,
                    std::span<const Complex> w) {
  if (z.size() != space.dimension || w.size() != space.dimension) {
    throw dimension_error("kernel arguments must have the space dimension");
  }
  Complex dot{0.0, 0.0};
  for (std::uint32_t i = 0; i < space.dimension; ++i) {
    dot += z[i] * std::conj(w[i]);
  }
  return std::exp(dot / space.t);
}

Complex kernel_reproduce(const BargmannSpace& space, const HoloPoly& f,
                         std::span<const Complex> z,
                         const QuadratureGrid& grid) {
  check_space_dims(space, f);
  if (z.size() != space.dimension) {
    throw dimension_error("evaluation point must have the space dimension");
  }
  const PolarRule rule = make_polar_rule(space, grid);

  // Per variable i and exponent b, the integral of
  // e^{z_i conj(w)/t} w^b against the Gaussian weight in w.
  const std::uint32_t max_pow = f.max_degree();
  std::vector<std::vector<Complex>> table(space.dimension);
  for (std::uint32_t i = 0; i < space.dimension; ++i) {
    table[i].assign(max_pow + 1, Complex{0.0, 0.0});
    for (std::size_t j = 0; j < rule.radius.size(); ++j) {
      for (double theta : rule.angle) {
        const Complex w = std::polar(rule.radius[j], theta);
        const Complex kernel_part = std::exp(z[i] * std::conj(w) / space.t);
        const double wt = rule.radial_weight[j] * rule.angle_weight;
        Complex w_pow{1.0, 0.0};
        for (std::uint32_t b = 0; b <= max_pow; ++b) {
          table[i][b] += wt * kernel_part * w_pow;
          w_pow *= w;
        }
      }
    }
  }

  Complex total{0.0, 0.0};
  for (const auto& [index, coeff] : f.terms()) {
    Complex term = coeff;
    for (std::uint32_t i = 0; i < space.dimension; ++i) {
      term *= table[i][index[i]];
    }
    total += term;
  }
  return total;
}

Complex kernel_semigroup_quadrature(const BargmannSpace& space,
                                    std::span<const Complex> z,
                                    std::span<const Complex> w,
                                    const QuadratureGrid& grid) {
  if (z.size() != space.dimension || w.size() != space.dimension) {
    throw dimension_error("kernel arguments must have the space dimension");
  }
  const PolarRule rule = make_polar_rule(space, grid);
  Complex total{1.0, 0.0};
  for (std::uint32_t i = 0; i < space.dimension; ++i) {
    Complex factor{0.0, 0.0};
    for (std::size_t j = 0; j < rule.radius.size(); ++j) {
      for (double theta : rule.angle) {
        const Complex u = std::polar(rule.radius[j], theta);
        factor += rule.radial_weight[j] * rule.angle_weight *
                  std::exp((z[i] * std::conj(u) + u * std::conj(w[i])) /
                           space.t);
      }
    }
    total *= factor;
  }
  return total;
}

RealLineSamples sampled_on_uniform_rule(
    double a, double b, std::size_t count,
    const std::function<Complex(double)>& f) {
  if (count < 2 || !(b > a)) {
    throw std::invalid_argument("sample rule needs at least two ordered points");
  }
  RealLineSamples out;
  out.points.resize(count);
  out.weights.resize(count);
  out.values.resize(count);
  const double h = (b - a) / static_cast<double>(count - 1);
  for (std::size_t k = 0; k < count; ++k) {
    out.points[k] = a + h * static_cast<double>(k);
    out.weights[k] = (k == 0 || k == count - 1) ? 0.5 * h : h;
    out.values[k] = f(out.points[k]);
  }
  return out;
}

Complex sb_transform(const BargmannSpace& space, const RealLineSamples& samples,
                     Complex z) {
  if (space.dimension != 1) {
    throw dimension_error("the transform acts one variable at a time");
  }
  if (samples.points.size() != samples.weights.size() ||
      samples.points.size() != samples.values.size() ||
      samples.points.empty()) {
    throw std::invalid_argument("sample arrays must be nonempty and aligned");
  }
  const auto [lo_it, hi_it] =
      std::minmax_element(samples.points.begin(), samples.points.end());
  const double edge = std::max(std::abs(*lo_it), std::abs(*hi_it));
  if (std::exp(-edge * edge / (2.0 * space.t)) > 1e-12) {
    throw envelope_error("sample rule stops before the Gaussian envelope decays");
  }
  const double t = space.t;
  const double norm = std::pow(kPi * t, -0.25);
  Complex total{0.0, 0.0};
  for (std::size_t k = 0; k < samples.points.size(); ++k) {
    const double x = samples.points[k];
    const Complex exponent =
        (-z * z + 2.0 * std::sqrt(2.0) * z * x - x * x) / (2.0 * t);
    total += samples.weights[k] * std::exp(exponent) * samples.values[k];
  }
  return norm * total;
}

Complex derivative_at(const BargmannSpace& space, const HoloPoly& f,
                      std::uint32_t order, Complex z0) {
  if (space.dimension != 1 || f.dimension() != 1) {
    throw dimension_error("derivative extraction is one-variable");
  }
  // Degree-n coefficient of f recentred at z0, then scaled to the pairing
  // value <(z - z0)^n, f> = n! t^n c_n(z0).
  Complex shifted{0.0, 0.0};
  for (const auto& [index, coeff] : f.terms()) {
    const std::uint32_t m = index[0];
    if (m < order) continue;
    shifted += coeff * binomial(m, order) * int_pow(z0, m - order);
  }
  return shifted * factorial(order) *
         std::pow(space.t, static_cast<double>(order));
}

Complex forward_difference(const std::function<Complex(Complex)>& f,
                           Complex z0, Complex h, int order) {
  if (h == Complex{0.0, 0.0}) {
    throw std::invalid_argument("difference step must be nonzero");
  }
  switch (order) {
    case 1:
      return (f(z0 + h) - f(z0)) / h;
    case 2:
      return (f(z0 + 2.0 * h) - 2.0 * f(z0 + h) + f(z0)) / (h * h);
    default:
      throw std::invalid_argument("difference order must be 1 or 2");
  }
}

double hypergeometric_coefficient(std::span<const double> p_params,
                                  std::span<const double> q_params,
                                  std::uint32_t order) {
  double numerator = 1.0;
  for (double a : p_params) numerator *= pochhammer(a, order);
  double denominator = 1.0;
  for (double b : q_params) {
    for (std::uint32_t j = 0; j < order; ++j) {
      if (b + static_cast<double>(j) == 0.0) {
        throw pole_error("lower parameter " + std::to_string(b) +
                         " hits a pole before order " + std::to_string(order));
      }
    }
    denominator *= pochhammer(b, order);
  }
  const double ratio = numerator / denominator;

  // Independent route: build the truncated series and pair it with z^n.
  std::vector<std::pair<MultiIndex, Complex>> entries;
  for (std::uint32_t k = 0; k <= order; ++k) {
    double ck = 1.0;
    for (double a : p_params) ck *= pochhammer(a, k);
    for (double b : q_params) ck /= pochhammer(b, k);
    entries.emplace_back(MultiIndex{k}, Complex{ck / factorial(k), 0.0});
  }
  const BargmannSpace unit_space(1, 1.0);
  const auto series = HoloPoly::from_terms(1, order, entries);
  const auto probe = HoloPoly::monomial(1, order, {order});
  const double paired = inner_product(unit_space, probe, series).real();

  const double scale = std::max({1.0, std::abs(ratio), std::abs(paired)});
  if (std::abs(ratio - paired) > 1e-10 * scale) {
    throw reconciliation_error(
        "series pairing disagrees with the parameter product");
  }
  return ratio;
}

}  // namespace hologate
