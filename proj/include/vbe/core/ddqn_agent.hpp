#pragma once

#include "vbe/core/agent.hpp"
#include "vbe/core/ddqn.hpp"
#include "vbe/core/replay_buffer.hpp"

namespace vbe::core {

/// Double DQN with an epsilon-greedy behavior policy.
class DdqnAgent final : public Agent {
 public:
  explicit DdqnAgent(AgentContext ctx);

  std::string name() const override { return "ddqn_eps"; }
  int act(const Observation& s) override;
  void observe(const Transition& t) override;
  Eigen::VectorXd action_values(const Observation& s) const override;

  const TargetNetPair& q() const { return q_; }
  const ReplayBuffer& buffer() const { return buffer_; }

 private:
  AgentContext ctx_;
  Rng init_rng_;
  Rng replay_rng_;
  Rng policy_rng_;
  TargetNetPair q_;
  ReplayBuffer buffer_;
};

}  // namespace vbe::core
