#pragma once

#include <vector>

#include "vbe/core/agent.hpp"
#include "vbe/core/ddqn.hpp"
#include "vbe/core/replay_buffer.hpp"

namespace vbe::explore {

/// Learnable f plus frozen random prior p; the head's value is f + c * p.
struct PriorHead {
  core::TargetNetPair f;
  approx::Mlp prior;
};

/// Bootstrapped DQN with additive random priors. One head is sampled
/// uniformly per episode and followed greedily; every head trains on the
/// same mini-batch. DQN-P is the single-head case without resampling.
class BdqnAgent final : public core::Agent {
 public:
  explicit BdqnAgent(core::AgentContext ctx, bool resample_heads = true);

  std::string name() const override { return resample_ ? "bdqn" : "dqn_p"; }
  void begin_episode() override;
  int act(const Observation& s) override;
  void observe(const core::Transition& t) override;
  /// Composed value of the active head.
  Eigen::VectorXd action_values(const Observation& s) const override;

  int num_heads() const { return static_cast<int>(heads_.size()); }
  int active_head() const { return active_; }
  const PriorHead& head(int h) const { return heads_.at(h); }
  /// f_h + c * p_h on every row of phi.
  Eigen::MatrixXd composed(int h, const approx::SparseRows& phi, bool frozen = false) const;

 private:
  core::AgentContext ctx_;
  bool resample_;
  Rng init_rng_;
  Rng replay_rng_;
  Rng policy_rng_;
  Rng head_rng_;
  std::vector<PriorHead> heads_;
  core::ReplayBuffer buffer_;
  int active_ = 0;
};

}  // namespace vbe::explore
