#include "hologate/holo_poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include <Eigen/SVD>

#include "hologate/errors.hpp"

namespace hologate {

namespace {

bool coeff_is_zero(Complex c) { return c.real() == 0.0 && c.imag() == 0.0; }

// Restriction of an exponent vector to a sorted list of variables.
MultiIndex restrict_index(const MultiIndex& idx,
                          const std::vector<std::uint32_t>& vars) {
  MultiIndex out;
  out.reserve(vars.size());
  for (std::uint32_t v : vars) out.push_back(idx[v]);
  return out;
}

std::string format_real(double x) {
  if (x == std::floor(x) && std::abs(x) < 1e15) {
    return std::to_string(static_cast<long long>(x));
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", x);
  return buf;
}

// Renders one coefficient for to_string, omitting unit factors in front of
// monomials and wrapping genuinely complex values in parentheses.
std::string format_coeff(Complex c, bool leading, bool constant_term) {
  const double re = c.real();
  const double im = c.imag();
  std::string sign = leading ? (re < 0 && im == 0.0 ? "-" : "") : "+";
  if (im == 0.0) {
    double mag = std::abs(re);
    if (!leading && re < 0) sign = "-";
    if (mag == 1.0 && !constant_term) return sign;
    return sign + format_real(mag);
  }
  if (re == 0.0) {
    std::string body;
    double mag = std::abs(im);
    if (!leading && im < 0) sign = "-";
    if (leading && im < 0) sign = "-";
    body = (mag == 1.0 && !constant_term) ? "i" : format_real(mag) + "i";
    return sign + body;
  }
  std::string body = "(" + format_real(re);
  body += im < 0 ? "-" : "+";
  double mag = std::abs(im);
  body += (mag == 1.0 ? "i" : format_real(mag) + "i");
  body += ")";
  return sign + body;
}

}  // namespace

HoloPoly::HoloPoly(std::uint32_t dimension, std::uint32_t max_degree)
    : dimension_(dimension), max_degree_(max_degree) {
  if (dimension == 0) {
    throw dimension_error("polynomial dimension must be positive");
  }
}

void HoloPoly::check_index(const MultiIndex& index) const {
  if (index.size() != dimension_) {
    throw dimension_error("index length " + std::to_string(index.size()) +
                          " does not match dimension " +
                          std::to_string(dimension_));
  }
  if (total_degree(index) > max_degree_) {
    throw degree_overflow_error("term " + index_to_string(index) +
                                    " exceeds degree bound " +
                                    std::to_string(max_degree_),
                                index);
  }
}

void HoloPoly::insert_term(const MultiIndex& index, Complex coeff) {
  check_index(index);
  auto [it, inserted] = terms_.try_emplace(index, coeff);
  if (!inserted) it->second += coeff;
  if (coeff_is_zero(it->second)) terms_.erase(it);
}

HoloPoly HoloPoly::from_terms(
    std::uint32_t dimension, std::uint32_t max_degree,
    const std::vector<std::pair<MultiIndex, Complex>>& entries) {
  HoloPoly out(dimension, max_degree);
  for (const auto& [index, coeff] : entries) out.insert_term(index, coeff);
  return out;
}

HoloPoly HoloPoly::monomial(std::uint32_t dimension, std::uint32_t max_degree,
                            const MultiIndex& index, Complex coeff) {
  HoloPoly out(dimension, max_degree);
  out.insert_term(index, coeff);
  return out;
}

HoloPoly HoloPoly::constant(std::uint32_t dimension, std::uint32_t max_degree,
                            Complex value) {
  HoloPoly out(dimension, max_degree);
  out.insert_term(MultiIndex(dimension, 0), value);
  return out;
}

Complex HoloPoly::coefficient(const MultiIndex& index) const {
  if (index.size() != dimension_) {
    throw dimension_error("coefficient query index length mismatch");
  }
  auto it = terms_.find(index);
  return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

HoloPoly HoloPoly::partial_derivative(std::uint32_t variable) const {
  if (variable >= dimension_) {
    throw dimension_error("derivative variable out of range");
  }
  HoloPoly out(dimension_, max_degree_);
  for (const auto& [index, coeff] : terms_) {
    if (index[variable] == 0) continue;
    MultiIndex shifted = index;
    shifted[variable] -= 1;
    out.insert_term(shifted,
                    coeff * static_cast<double>(index[variable]));
  }
  return out;
}

HoloPoly HoloPoly::multiply_by_variable(std::uint32_t variable) const {
  if (variable >= dimension_) {
    throw dimension_error("variable out of range");
  }
  HoloPoly out(dimension_, max_degree_);
  for (const auto& [index, coeff] : terms_) {
    MultiIndex shifted = index;
    shifted[variable] += 1;
    out.insert_term(shifted, coeff);
  }
  return out;
}

Complex HoloPoly::evaluate(std::span<const Complex> point) const {
  if (point.size() != dimension_) {
    throw dimension_error("evaluation point length mismatch");
  }
  Complex total{0.0, 0.0};
  for (const auto& [index, coeff] : terms_) {
    Complex term = coeff;
    for (std::uint32_t i = 0; i < dimension_; ++i) {
      for (std::uint32_t p = 0; p < index[i]; ++p) term *= point[i];
    }
    total += term;
  }
  return total;
}

HoloPoly HoloPoly::scaled(Complex factor) const {
  HoloPoly out(dimension_, max_degree_);
  if (coeff_is_zero(factor)) return out;
  for (const auto& [index, coeff] : terms_) {
    out.insert_term(index, coeff * factor);
  }
  return out;
}

HoloPoly HoloPoly::with_max_degree(std::uint32_t max_degree) const {
  HoloPoly out(dimension_, max_degree);
  for (const auto& [index, coeff] : terms_) out.insert_term(index, coeff);
  return out;
}

double HoloPoly::max_coefficient_magnitude() const {
  double best = 0.0;
  for (const auto& [index, coeff] : terms_) {
    best = std::max(best, std::abs(coeff));
  }
  return best;
}

HoloPoly linear_combine(std::span<const Complex> coeffs,
                        std::span<const HoloPoly> polys) {
  if (coeffs.size() != polys.size() || polys.empty()) {
    throw dimension_error("linear combination needs matching nonempty lists");
  }
  const std::uint32_t d = polys[0].dimension();
  const std::uint32_t D = polys[0].max_degree();
  std::vector<std::pair<MultiIndex, Complex>> entries;
  for (std::size_t k = 0; k < polys.size(); ++k) {
    if (polys[k].dimension() != d || polys[k].max_degree() != D) {
      throw dimension_error("linear combination operands must share shape");
    }
    for (const auto& [index, coeff] : polys[k].terms()) {
      entries.emplace_back(index, coeffs[k] * coeff);
    }
  }
  return HoloPoly::from_terms(d, D, entries);
}

HoloPoly add(const HoloPoly& f, const HoloPoly& g) {
  const Complex ones[2] = {Complex{1.0, 0.0}, Complex{1.0, 0.0}};
  const HoloPoly operands[2] = {f, g};
  return linear_combine(ones, operands);
}

HoloPoly multiply(const HoloPoly& f, const HoloPoly& g,
                  std::optional<std::uint32_t> result_max_degree) {
  if (f.dimension() != g.dimension()) {
    throw dimension_error("product operands must share dimension");
  }
  const std::uint32_t D =
      result_max_degree.value_or(f.max_degree() + g.max_degree());
  HoloPoly out(f.dimension(), D);
  std::vector<std::pair<MultiIndex, Complex>> entries;
  for (const auto& [ia, ca] : f.terms()) {
    for (const auto& [ib, cb] : g.terms()) {
      MultiIndex sum = ia;
      for (std::uint32_t i = 0; i < f.dimension(); ++i) sum[i] += ib[i];
      entries.emplace_back(std::move(sum), ca * cb);
    }
  }
  return HoloPoly::from_terms(f.dimension(), D, entries);
}

HoloPoly embed(const HoloPoly& f, std::uint32_t new_dimension,
               const std::vector<std::uint32_t>& variable_map) {
  if (variable_map.size() != f.dimension()) {
    throw dimension_error("variable map length must match source dimension");
  }
  std::set<std::uint32_t> seen;
  for (std::uint32_t v : variable_map) {
    if (v >= new_dimension) {
      throw dimension_error("variable map entry exceeds target dimension");
    }
    if (!seen.insert(v).second) {
      throw dimension_error("variable map entries must be distinct");
    }
  }
  std::vector<std::pair<MultiIndex, Complex>> entries;
  for (const auto& [index, coeff] : f.terms()) {
    MultiIndex target(new_dimension, 0);
    for (std::uint32_t i = 0; i < f.dimension(); ++i) {
      target[variable_map[i]] = index[i];
    }
    entries.emplace_back(std::move(target), coeff);
  }
  return HoloPoly::from_terms(new_dimension, f.max_degree(), entries);
}

bool approx_equal(const HoloPoly& f, const HoloPoly& g, double tol) {
  if (f.dimension() != g.dimension()) return false;
  for (const auto& [index, coeff] : f.terms()) {
    if (std::abs(coeff - g.coefficient(index)) > tol) return false;
  }
  for (const auto& [index, coeff] : g.terms()) {
    if (std::abs(coeff - f.coefficient(index)) > tol) return false;
  }
  return true;
}

CoefficientMatrix coefficient_matrix(const HoloPoly& f,
                                     const VariablePartition& partition) {
  std::vector<bool> covered(f.dimension(), false);
  for (std::uint32_t v : partition.group_a) {
    if (v >= f.dimension() || covered[v]) {
      throw dimension_error("partition group A is not a valid variable set");
    }
    covered[v] = true;
  }
  for (std::uint32_t v : partition.group_b) {
    if (v >= f.dimension() || covered[v]) {
      throw dimension_error("partition groups must be disjoint and in range");
    }
    covered[v] = true;
  }
  for (std::uint32_t i = 0; i < f.dimension(); ++i) {
    if (!covered[i]) {
      throw dimension_error("partition must cover every variable");
    }
  }

  std::vector<std::uint32_t> vars_a = partition.group_a;
  std::vector<std::uint32_t> vars_b = partition.group_b;
  std::sort(vars_a.begin(), vars_a.end());
  std::sort(vars_b.begin(), vars_b.end());

  std::set<MultiIndex> rows_set, cols_set;
  for (const auto& [index, coeff] : f.terms()) {
    rows_set.insert(restrict_index(index, vars_a));
    cols_set.insert(restrict_index(index, vars_b));
  }

  CoefficientMatrix out;
  out.row_indices.assign(rows_set.begin(), rows_set.end());
  out.col_indices.assign(cols_set.begin(), cols_set.end());
  std::map<MultiIndex, std::size_t> row_of, col_of;
  for (std::size_t r = 0; r < out.row_indices.size(); ++r) {
    row_of[out.row_indices[r]] = r;
  }
  for (std::size_t c = 0; c < out.col_indices.size(); ++c) {
    col_of[out.col_indices[c]] = c;
  }
  out.matrix = Eigen::MatrixXcd::Zero(
      static_cast<Eigen::Index>(out.row_indices.size()),
      static_cast<Eigen::Index>(out.col_indices.size()));
  for (const auto& [index, coeff] : f.terms()) {
    const auto r =
        static_cast<Eigen::Index>(row_of.at(restrict_index(index, vars_a)));
    const auto c =
        static_cast<Eigen::Index>(col_of.at(restrict_index(index, vars_b)));
    out.matrix(r, c) = coeff;
  }
  return out;
}

bool is_product_state(const HoloPoly& f, const VariablePartition& partition,
                      double tol) {
  if (f.is_zero()) {
    throw zero_state_error("product test is undefined for the zero state");
  }
  CoefficientMatrix cm = coefficient_matrix(f, partition);
  if (cm.matrix.rows() == 1 || cm.matrix.cols() == 1) return true;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(cm.matrix);
  const auto& sv = svd.singularValues();
  return sv(1) <= tol * sv(0);
}

std::string to_string(const HoloPoly& f) {
  if (f.is_zero()) return "0";
  // Descending index order puts the highest powers of z1 first.
  std::vector<const HoloPoly::TermMap::value_type*> ordered;
  ordered.reserve(f.term_count());
  for (const auto& entry : f.terms()) ordered.push_back(&entry);
  std::reverse(ordered.begin(), ordered.end());

  std::string out;
  bool leading = true;
  for (const auto* entry : ordered) {
    const MultiIndex& index = entry->first;
    const bool constant_term = total_degree(index) == 0;
    out += format_coeff(entry->second, leading, constant_term);
    for (std::uint32_t i = 0; i < f.dimension(); ++i) {
      if (index[i] == 0) continue;
      out += "z" + std::to_string(i + 1);
      if (index[i] > 1) out += "^" + std::to_string(index[i]);
    }
    leading = false;
  }
  return out;
}

}  // namespace hologate
