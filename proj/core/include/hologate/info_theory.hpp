#pragma once

#include <vector>

#include <Eigen/Core>

#include "hologate/bargmann.hpp"
#include "hologate/diff_op.hpp"
#include "hologate/holo_poly.hpp"

namespace hologate {

// An ordered family of states read as one channel: component i carries the
// weight <f_i|f_i> of its squared norm. At least one component must be
// nonzero and all must share the space's dimension.
struct ChannelEnsemble {
  ChannelEnsemble(BargmannSpace space, std::vector<HoloPoly> components);

  BargmannSpace space;
  std::vector<HoloPoly> components;
};

// Nonnegative entries summing to one within 1e-12.
class ProbVector {
 public:
  explicit ProbVector(std::vector<double> probabilities);

  const std::vector<double>& values() const { return probabilities_; }
  std::size_t size() const { return probabilities_.size(); }
  double operator[](std::size_t i) const { return probabilities_[i]; }

 private:
  std::vector<double> probabilities_;
};

// Norm fractions p_i = <f_i|f_i> / sum_j <f_j|f_j>.
ProbVector channel_probabilities(const ChannelEnsemble& ensemble);

// -sum p ln p in nats, with 0 ln 0 = 0.
double shannon_entropy(const ProbVector& p);

// Entropy of the gate images minus entropy of the inputs. The sign is not
// constrained: a norm-skewing gate can lower it.
double entropy_change(const ChannelEnsemble& ensemble, const DiffOp& op);

// sum p_i ln(p_i/q_i); requires p absolutely continuous w.r.t. q.
double kl_divergence(const ProbVector& p, const ProbVector& q);

// sum_ij J(i,j) ln(J(i,j) / (r_i c_j)) for the marginals r and c of a
// joint distribution over the matrix entries.
double mutual_information(const Eigen::MatrixXd& joint);

}  // namespace hologate
