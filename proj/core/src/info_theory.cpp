#include "hologate/info_theory.hpp"

#include <cmath>
#include <stdexcept>

#include "hologate/errors.hpp"

namespace hologate {

ChannelEnsemble::ChannelEnsemble(BargmannSpace space_,
                                 std::vector<HoloPoly> components_)
    : space(space_), components(std::move(components_)) {
  if (components.empty()) {
    throw zero_state_error("channel ensemble needs at least one component");
  }
  bool any_nonzero = false;
  for (const auto& f : components) {
    if (f.dimension() != space.dimension) {
      throw dimension_error("ensemble component dimension mismatch");
    }
    any_nonzero = any_nonzero || !f.is_zero();
  }
  if (!any_nonzero) {
    throw zero_state_error("all ensemble components are zero");
  }
}

ProbVector::ProbVector(std::vector<double> probabilities)
    : probabilities_(std::move(probabilities)) {
  if (probabilities_.empty()) {
    throw std::invalid_argument("probability vector must be nonempty");
  }
  double total = 0.0;
  for (double p : probabilities_) {
    if (!(p >= 0.0)) {
      throw std::invalid_argument("probabilities must be nonnegative");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("probabilities must sum to one");
  }
}

ProbVector channel_probabilities(const ChannelEnsemble& ensemble) {
  std::vector<double> weights;
  weights.reserve(ensemble.components.size());
  double total = 0.0;
  for (const auto& f : ensemble.components) {
    const double w = inner_product(ensemble.space, f, f).real();
    weights.push_back(w);
    total += w;
  }
  if (total <= 0.0) {
    throw zero_state_error("ensemble has zero total norm");
  }
  for (double& w : weights) w /= total;
  return ProbVector(std::move(weights));
}

double shannon_entropy(const ProbVector& p) {
  double s = 0.0;
  for (double pi : p.values()) {
    if (pi > 0.0) s -= pi * std::log(pi);
  }
  return s;
}

double entropy_change(const ChannelEnsemble& ensemble, const DiffOp& op) {
  std::vector<HoloPoly> images;
  images.reserve(ensemble.components.size());
  for (const auto& f : ensemble.components) {
    images.push_back(op.apply(f));
  }
  const ChannelEnsemble output(ensemble.space, std::move(images));
  return shannon_entropy(channel_probabilities(output)) -
         shannon_entropy(channel_probabilities(ensemble));
}

double kl_divergence(const ProbVector& p, const ProbVector& q) {
  if (p.size() != q.size()) {
    throw dimension_error("relative entropy needs equal-length distributions");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) {
      throw support_error("distribution support exceeds the reference at index " +
                          std::to_string(i));
    }
    total += p[i] * std::log(p[i] / q[i]);
  }
  return total;
}

double mutual_information(const Eigen::MatrixXd& joint) {
  if (joint.rows() == 0 || joint.cols() == 0) {
    throw std::invalid_argument("joint distribution must be nonempty");
  }
  double total = 0.0;
  for (Eigen::Index r = 0; r < joint.rows(); ++r) {
    for (Eigen::Index c = 0; c < joint.cols(); ++c) {
      if (!(joint(r, c) >= 0.0)) {
        throw std::invalid_argument("joint entries must be nonnegative");
      }
      total += joint(r, c);
    }
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("joint distribution must sum to one");
  }
  const Eigen::VectorXd row_marginal = joint.rowwise().sum();
  const Eigen::VectorXd col_marginal = joint.colwise().sum();
  double info = 0.0;
  for (Eigen::Index r = 0; r < joint.rows(); ++r) {
    for (Eigen::Index c = 0; c < joint.cols(); ++c) {
      const double j = joint(r, c);
      if (j > 0.0) {
        info += j * std::log(j / (row_marginal(r) * col_marginal(c)));
      }
    }
  }
  return info;
}

}  // namespace hologate
