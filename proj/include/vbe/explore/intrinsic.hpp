#pragma once

#include <memory>
#include <vector>

#include "vbe/core/agent.hpp"
#include "vbe/core/ddqn.hpp"
#include "vbe/core/replay_buffer.hpp"

namespace vbe::explore {

/// Action-value function of an intrinsic reward. Non-episodic: every
/// bootstrap uses `gamma`, terminal transitions included. Bootstrap actions
/// are its own live argmax.
class IntrinsicValueHead {
 public:
  IntrinsicValueHead() = default;
  IntrinsicValueHead(approx::Mlp net, approx::OptimizerConfig opt, int period, double gamma);

  double gamma() const { return gamma_; }
  const core::TargetNetPair& net() const { return net_; }
  Eigen::MatrixXd values(const approx::SparseRows& phi) const { return net_.live().values(phi); }

  double update(const core::EncodedBatch& batch, std::span<const double> intrinsic_rewards, Rng& tie_rng);
  void tick() { net_.tick(); }

 private:
  core::TargetNetPair net_;
  double gamma_ = 0.99;
};

/// Reward-bonus generator plugged into IntrinsicAgent.
class BonusModel {
 public:
  virtual ~BonusModel() = default;
  /// Intrinsic reward for every transition of the batch.
  virtual Eigen::VectorXd rewards(const core::EncodedBatch& batch) const = 0;
  /// One training step of the bonus predictors on the batch.
  virtual void train(const core::EncodedBatch& batch) = 0;
};

/// Squared error between a frozen random embedding and a trained predictor,
/// evaluated at the next state.
class RndModel final : public BonusModel {
 public:
  RndModel(const core::AgentContext& ctx, Rng& init_rng);

  /// rows-long vector of ||predictor(x) - target(x)||^2.
  Eigen::VectorXd error(const approx::SparseRows& phi) const;
  Eigen::VectorXd rewards(const core::EncodedBatch& batch) const override { return error(batch.phi_next); }
  void train(const core::EncodedBatch& batch) override;
  /// Regression step on arbitrary inputs; returns the loss before the step.
  double fit(const approx::SparseRows& phi);

  const approx::Mlp& target() const { return target_; }
  const approx::Mlp& predictor() const { return predictor_; }
  void set_predictor(const Eigen::VectorXd& params) { predictor_.set_params(params); }

 private:
  approx::Mlp target_;
  approx::Mlp predictor_;
  approx::Optimizer opt_;
};

/// Ensemble of k frozen per-action scalar targets g_i with regression
/// predictors; the bonus at (s, a) is max_i |g_hat_i - g_i|.
class AcbModel final : public BonusModel {
 public:
  AcbModel(const core::AgentContext& ctx, Rng& init_rng);

  int size() const { return static_cast<int>(targets_.size()); }
  /// actions x rows matrix of bonuses, using only the first `members` pairs
  /// (all when 0).
  Eigen::MatrixXd bonus(const approx::SparseRows& phi, int members = 0) const;
  Eigen::VectorXd rewards(const core::EncodedBatch& batch) const override;
  /// Updates every member.
  void train(const core::EncodedBatch& batch) override;

  const approx::Mlp& target(int i) const { return targets_.at(i); }
  const approx::Mlp& predictor(int i) const { return predictors_.at(i); }
  void set_predictor(int i, const Eigen::VectorXd& params) { predictors_.at(i).set_params(params); }

 private:
  std::vector<approx::Mlp> targets_;
  std::vector<approx::Mlp> predictors_;
  std::vector<approx::Optimizer> opts_;
};

/// Double DQN whose behavior policy adds c times a learned intrinsic value.
class IntrinsicAgent final : public core::Agent {
 public:
  enum class Kind { rnd, acb };

  IntrinsicAgent(core::AgentContext ctx, Kind kind);

  std::string name() const override { return kind_ == Kind::rnd ? "rnd" : "acb"; }
  int act(const Observation& s) override;
  void observe(const core::Transition& t) override;
  Eigen::VectorXd action_values(const Observation& s) const override;

  /// Behavioral bonus: the intrinsic head's values at s.
  Eigen::VectorXd bonus(const Observation& s) const;
  const BonusModel& model() const { return *model_; }
  const IntrinsicValueHead& head() const { return head_; }

 private:
  core::AgentContext ctx_;
  Kind kind_;
  Rng init_rng_;
  Rng replay_rng_;
  Rng policy_rng_;
  core::TargetNetPair q_;
  std::unique_ptr<BonusModel> model_;
  IntrinsicValueHead head_;
  core::ReplayBuffer buffer_;
};

}  // namespace vbe::explore
