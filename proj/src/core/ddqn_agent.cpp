#include "vbe/core/ddqn_agent.hpp"

#include "vbe/core/policy.hpp"

namespace vbe::core {

DdqnAgent::DdqnAgent(AgentContext ctx)
    : ctx_(std::move(ctx)),
      init_rng_(ctx_.rng(Stream::agent_init)),
      replay_rng_(ctx_.rng(Stream::replay)),
      policy_rng_(ctx_.rng(Stream::policy)),
      buffer_(ctx_.config.buffer_capacity) {
  ctx_.config.validate();
  q_ = TargetNetPair(ctx_.make_network(ctx_.num_actions, init_rng_), ctx_.config.optimizer_config(),
                     ctx_.config.tau);
}

int DdqnAgent::act(const Observation& s) {
  return select_action_epsgreedy(action_values(s), ctx_.config.epsilon, policy_rng_);
}

void DdqnAgent::observe(const Transition& t) {
  buffer_.add(t);
  const auto sample = buffer_.sample(ctx_.config.batch_size, replay_rng_);
  const EncodedBatch batch = encode_batch(sample, ctx_.features);
  ddqn_update(q_.live(), q_.frozen(), q_.optimizer(), batch, policy_rng_);
  q_.tick();
}

Eigen::VectorXd DdqnAgent::action_values(const Observation& s) const {
  return q_.live().values(ctx_.features.encode(s)).col(0);
}

}  // namespace vbe::core
