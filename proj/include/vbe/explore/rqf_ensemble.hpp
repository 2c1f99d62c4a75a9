#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "vbe/core/agent.hpp"
#include "vbe/core/ddqn.hpp"

namespace vbe::explore {

/// Elementwise max over i of |predictions[i] - targets[i]|.
Eigen::MatrixXd ensemble_bonus(std::span<const Eigen::MatrixXd> predictions,
                               std::span<const Eigen::MatrixXd> targets);

/// k frozen random action-value functions f*_i, k trainable predictors and
/// the predictors' target-network copies. The gap between predictor and
/// target is the value bonus.
class RqfEnsemble {
 public:
  RqfEnsemble() = default;
  /// Targets and predictors are drawn independently from the same
  /// architecture and init family.
  RqfEnsemble(const core::AgentContext& ctx, Rng& init_rng);

  int size() const { return static_cast<int>(targets_.size()); }

  const approx::Mlp& target(int i) const { return targets_.at(i); }
  const approx::Mlp& predictor(int i) const { return predictors_.at(i).live(); }
  const approx::Mlp& predictor_frozen(int i) const { return predictors_.at(i).frozen(); }
  /// Test hook: overwrite predictor i (live and frozen copy).
  void set_predictor(int i, const Eigen::VectorXd& params);
  void set_target(int i, const Eigen::VectorXd& params);

  /// actions x rows matrix of max_i |f_hat_i - f*_i|.
  Eigen::MatrixXd bonus(const approx::SparseRows& phi) const;

  /// r_i = f*_i(s, a) - discount * f*_i(s', a') per transition.
  Eigen::VectorXd rewards(int i, const core::EncodedBatch& batch, std::span<const int> next_actions) const;

  /// TD step of predictor i toward r_i + discount * f_hat_i^frozen(s', a').
  double td_update(int i, const core::EncodedBatch& batch, std::span<const int> next_actions);

  /// Regression of predictor i onto f*_i at the batch's (s, a).
  double supervised_update(int i, const core::EncodedBatch& batch);

  /// Copies every live predictor into its frozen twin.
  void sync();

 private:
  void check_index(int i) const;

  std::vector<approx::Mlp> targets_;
  std::vector<core::TargetNetPair> predictors_;
};

}  // namespace vbe::explore
