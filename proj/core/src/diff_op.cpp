#include "hologate/diff_op.hpp"

#include <algorithm>
#include <string>

#include "hologate/errors.hpp"

namespace hologate {

namespace {

bool coeff_is_zero(Complex c) { return c.real() == 0.0 && c.imag() == 0.0; }

std::string power_string(const char* symbol, const MultiIndex& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] == 0) continue;
    out += symbol + std::to_string(i + 1);
    if (idx[i] > 1) out += "^" + std::to_string(idx[i]);
  }
  return out;
}

}  // namespace

DiffOp::DiffOp(std::uint32_t dimension) : dimension_(dimension) {
  if (dimension == 0) {
    throw dimension_error("operator dimension must be positive");
  }
}

void DiffOp::insert_term(const MultiIndex& creation,
                         const MultiIndex& annihilation, Complex coeff) {
  if (creation.size() != dimension_ || annihilation.size() != dimension_) {
    throw dimension_error("operator term index length mismatch");
  }
  OpTermKey key{creation, annihilation};
  auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
  if (!inserted) it->second += coeff;
  if (coeff_is_zero(it->second)) terms_.erase(it);
}

DiffOp DiffOp::from_terms(
    std::uint32_t dimension,
    const std::vector<std::tuple<MultiIndex, MultiIndex, Complex>>& terms) {
  DiffOp out(dimension);
  for (const auto& [creation, annihilation, coeff] : terms) {
    out.insert_term(creation, annihilation, coeff);
  }
  return out;
}

DiffOp DiffOp::word(std::uint32_t dimension, const MultiIndex& creation,
                    const MultiIndex& annihilation, Complex coeff) {
  DiffOp out(dimension);
  out.insert_term(creation, annihilation, coeff);
  return out;
}

bool DiffOp::is_first_order() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& entry) {
    return total_degree(entry.first.creation) == 1 &&
           total_degree(entry.first.annihilation) == 1;
  });
}

HoloPoly DiffOp::apply(const HoloPoly& f) const {
  if (f.dimension() != dimension_) {
    throw dimension_error("operator and state dimensions differ");
  }
  std::vector<std::pair<MultiIndex, Complex>> entries;
  for (const auto& [key, c] : terms_) {
    for (const auto& [gamma, cf] : f.terms()) {
      double factor = 1.0;
      for (std::uint32_t i = 0; i < dimension_ && factor != 0.0; ++i) {
        factor *= falling_factorial(gamma[i], key.annihilation[i]);
      }
      if (factor == 0.0) continue;
      MultiIndex image(dimension_);
      for (std::uint32_t i = 0; i < dimension_; ++i) {
        image[i] = gamma[i] - key.annihilation[i] + key.creation[i];
      }
      entries.emplace_back(std::move(image), c * cf * factor);
    }
  }
  return HoloPoly::from_terms(dimension_, f.max_degree(), entries);
}

DiffOp add(const DiffOp& a, const DiffOp& b) {
  if (a.dimension() != b.dimension()) {
    throw dimension_error("operator sum needs matching dimensions");
  }
  std::vector<std::tuple<MultiIndex, MultiIndex, Complex>> terms;
  for (const auto& [key, c] : a.terms()) {
    terms.emplace_back(key.creation, key.annihilation, c);
  }
  for (const auto& [key, c] : b.terms()) {
    terms.emplace_back(key.creation, key.annihilation, c);
  }
  return DiffOp::from_terms(a.dimension(), terms);
}

DiffOp subtract(const DiffOp& a, const DiffOp& b) {
  return add(a, scaled(b, Complex{-1.0, 0.0}));
}

DiffOp scaled(const DiffOp& op, Complex factor) {
  std::vector<std::tuple<MultiIndex, MultiIndex, Complex>> terms;
  if (!coeff_is_zero(factor)) {
    for (const auto& [key, c] : op.terms()) {
      terms.emplace_back(key.creation, key.annihilation, c * factor);
    }
  }
  return DiffOp::from_terms(op.dimension(), terms);
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  if (a.dimension() != b.dimension()) {
    throw dimension_error("operator product needs matching dimensions");
  }
  const std::uint32_t d = a.dimension();
  std::vector<std::tuple<MultiIndex, MultiIndex, Complex>> terms;

  // Normal-order each word product: commuting d^b1 past z^a2 yields, per
  // variable, sum over k of C(b1,k) C(a2,k) k! with k derivatives consumed.
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const MultiIndex& b1 = ka.annihilation;
      const MultiIndex& a2 = kb.creation;
      MultiIndex limit(d);
      for (std::uint32_t i = 0; i < d; ++i) {
        limit[i] = std::min(b1[i], a2[i]);
      }
      MultiIndex k(d, 0);
      while (true) {
        double weight = 1.0;
        for (std::uint32_t i = 0; i < d; ++i) {
          weight *= binomial(b1[i], k[i]) * binomial(a2[i], k[i]) *
                    factorial(k[i]);
        }
        MultiIndex creation(d);
        MultiIndex annihilation(d);
        for (std::uint32_t i = 0; i < d; ++i) {
          creation[i] = ka.creation[i] + a2[i] - k[i];
          annihilation[i] = b1[i] - k[i] + kb.annihilation[i];
        }
        terms.emplace_back(std::move(creation), std::move(annihilation),
                           ca * cb * weight);

        std::uint32_t pos = 0;
        while (pos < d && k[pos] == limit[pos]) {
          k[pos] = 0;
          ++pos;
        }
        if (pos == d) break;
        ++k[pos];
      }
    }
  }
  return DiffOp::from_terms(d, terms);
}

DiffOp pruned(const DiffOp& op, double tol) {
  std::vector<std::tuple<MultiIndex, MultiIndex, Complex>> terms;
  for (const auto& [key, c] : op.terms()) {
    if (std::abs(c) > tol) {
      terms.emplace_back(key.creation, key.annihilation, c);
    }
  }
  return DiffOp::from_terms(op.dimension(), terms);
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) {
  const DiffOp ab = compose(a, b);
  const DiffOp ba = compose(b, a);
  double scale = 0.0;
  for (const auto& [key, c] : ab.terms()) scale = std::max(scale, std::abs(c));
  for (const auto& [key, c] : ba.terms()) scale = std::max(scale, std::abs(c));
  return pruned(subtract(ab, ba), 1e-13 * scale);
}

bool approx_equal(const DiffOp& a, const DiffOp& b, double tol) {
  if (a.dimension() != b.dimension()) return false;
  auto coeff_of = [](const DiffOp& op, const OpTermKey& key) {
    auto it = op.terms().find(key);
    return it == op.terms().end() ? Complex{0.0, 0.0} : it->second;
  };
  for (const auto& [key, c] : a.terms()) {
    if (std::abs(c - coeff_of(b, key)) > tol) return false;
  }
  for (const auto& [key, c] : b.terms()) {
    if (std::abs(c - coeff_of(a, key)) > tol) return false;
  }
  return true;
}

std::string to_string(const DiffOp& op) {
  if (op.is_zero()) return "0";
  std::string out;
  bool leading = true;
  for (const auto& [key, c] : op.terms()) {
    std::string body = power_string("z", key.creation);
    body += power_string("d", key.annihilation);
    if (!leading) out += " + ";
    leading = false;
    if (body.empty()) {
      out += "(" + std::to_string(c.real()) + "," + std::to_string(c.imag()) +
             ")";
    } else {
      out += "(" + std::to_string(c.real()) + "," + std::to_string(c.imag()) +
             ")" + body;
    }
  }
  return out;
}

}  // namespace hologate
