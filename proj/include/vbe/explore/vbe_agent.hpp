#pragma once

#include <vector>

#include "vbe/core/agent.hpp"
#include "vbe/core/ddqn.hpp"
#include "vbe/core/replay_buffer.hpp"
#include "vbe/explore/rqf_ensemble.hpp"

namespace vbe::explore {

enum class PredictorLoss { td, supervised };

/// Value bonuses from ensemble errors. Each step: one Double-DQN update of q
/// and one update of a uniformly chosen ensemble predictor, both on the same
/// mini-batch; every tau steps q and all predictors are synced.
/// With PredictorLoss::supervised this is the VBE-SL ablation.
class VbeAgent final : public core::Agent {
 public:
  explicit VbeAgent(core::AgentContext ctx, PredictorLoss loss = PredictorLoss::td);

  std::string name() const override { return loss_ == PredictorLoss::td ? "vbe" : "vbe_sl"; }
  int act(const Observation& s) override;
  void observe(const core::Transition& t) override;
  Eigen::VectorXd action_values(const Observation& s) const override;

  Eigen::VectorXd bonus(const Observation& s) const;
  const RqfEnsemble& ensemble() const { return ensemble_; }
  RqfEnsemble& ensemble() { return ensemble_; }
  const core::TargetNetPair& q() const { return q_; }
  /// How often each predictor index has been updated.
  const std::vector<long>& update_counts() const { return counts_; }

 private:
  std::vector<int> next_actions(const core::EncodedBatch& batch);

  core::AgentContext ctx_;
  PredictorLoss loss_;
  Rng init_rng_;
  Rng replay_rng_;
  Rng policy_rng_;
  Rng ensemble_rng_;
  core::TargetNetPair q_;
  RqfEnsemble ensemble_;
  core::ReplayBuffer buffer_;
  std::vector<long> counts_;
};

}  // namespace vbe::explore
