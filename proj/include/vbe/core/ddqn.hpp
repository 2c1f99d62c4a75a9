#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "vbe/approx/features.hpp"
#include "vbe/approx/mlp.hpp"
#include "vbe/approx/optimizer.hpp"
#include "vbe/common/random.hpp"
#include "vbe/core/transition.hpp"

namespace vbe::core {

/// Mini-batch with observations already pushed through a feature map.
struct EncodedBatch {
  approx::SparseRows phi;
  approx::SparseRows phi_next;
  std::vector<int> actions;
  std::vector<double> rewards;
  std::vector<double> discounts;

  int size() const { return static_cast<int>(actions.size()); }
};

EncodedBatch encode_batch(std::span<const Transition* const> batch, const approx::FeatureMap& features);

/// A trainable network, its periodically synced frozen copy, and the
/// optimizer that owns the live network's moment state.
class TargetNetPair {
 public:
  TargetNetPair() = default;
  /// The frozen copy starts equal to `live`.
  TargetNetPair(approx::Mlp live, approx::OptimizerConfig optimizer, int period);

  approx::Mlp& live() { return live_; }
  const approx::Mlp& live() const { return live_; }
  const approx::Mlp& frozen() const { return frozen_; }
  approx::Optimizer& optimizer() { return optimizer_; }

  int period() const { return period_; }
  int steps_since_sync() const { return since_sync_; }

  void sync();
  /// Counts one agent step; syncs and returns true every period() steps.
  bool tick();

 private:
  approx::Mlp live_;
  approx::Mlp frozen_;
  approx::Optimizer optimizer_;
  int period_ = 1;
  int since_sync_ = 0;
};

/// Index of the largest entry, ties broken uniformly at random. Does not
/// touch the generator when the maximum is unique.
int argmax_random_tie(const Eigen::Ref<const Eigen::VectorXd>& values, Rng& rng);

/// argmax_random_tie applied to every column.
std::vector<int> argmax_columns(const Eigen::MatrixXd& values, Rng& rng);

/// r_j + discount_j * evaluator(s'_j)[next_actions_j]. Rows with zero
/// discount never read the evaluator's output.
Eigen::VectorXd bootstrap_targets(const approx::Mlp& evaluator, const approx::SparseRows& phi_next,
                                  std::span<const int> next_actions, std::span<const double> rewards,
                                  std::span<const double> discounts);

/// One semi-gradient step on mean 0.5 * (target - net(s)[a])^2. Only the
/// taken action's output receives gradient. Returns the loss before the step.
double td_step(approx::Mlp& net, approx::Optimizer& opt, const approx::SparseRows& phi,
               std::span<const int> actions, std::span<const double> targets);

/// One step on the supervised loss mean (target - net(s)[a])^2.
double regression_step(approx::Mlp& net, approx::Optimizer& opt, const approx::SparseRows& phi,
                       std::span<const int> actions, std::span<const double> targets);

/// Double-DQN target for a single transition:
/// r + gamma * frozen(s', argmax_a' live(s', a')).
double ddqn_target(const approx::Mlp& live, const approx::Mlp& frozen,
                   const approx::FeatureMap& features, const Transition& t, Rng& tie_rng);

/// Double-DQN update with caller-chosen bootstrap actions (used when the
/// target policy is optimistic rather than greedy in `live`).
double ddqn_update(approx::Mlp& live, const approx::Mlp& frozen, approx::Optimizer& opt,
                   const EncodedBatch& batch, std::span<const int> next_actions);

/// Double-DQN update with bootstrap actions greedy in `live`.
double ddqn_update(approx::Mlp& live, const approx::Mlp& frozen, approx::Optimizer& opt,
                   const EncodedBatch& batch, Rng& tie_rng);

}  // namespace vbe::core
