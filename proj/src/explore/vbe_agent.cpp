#include "vbe/explore/vbe_agent.hpp"

#include "vbe/core/policy.hpp"

namespace vbe::explore {

VbeAgent::VbeAgent(core::AgentContext ctx, PredictorLoss loss)
    : ctx_(std::move(ctx)),
      loss_(loss),
      init_rng_(ctx_.rng(Stream::agent_init)),
      replay_rng_(ctx_.rng(Stream::replay)),
      policy_rng_(ctx_.rng(Stream::policy)),
      ensemble_rng_(ctx_.rng(Stream::ensemble)),
      buffer_(ctx_.config.buffer_capacity) {
  ctx_.config.validate();
  q_ = core::TargetNetPair(ctx_.make_network(ctx_.num_actions, init_rng_), ctx_.config.optimizer_config(),
                           ctx_.config.tau);
  ensemble_ = RqfEnsemble(ctx_, init_rng_);
  counts_.assign(ctx_.config.k, 0);
}

Eigen::VectorXd VbeAgent::action_values(const Observation& s) const {
  return q_.live().values(ctx_.features.encode(s)).col(0);
}

Eigen::VectorXd VbeAgent::bonus(const Observation& s) const {
  return ensemble_.bonus(ctx_.features.encode(s)).col(0);
}

int VbeAgent::act(const Observation& s) {
  const approx::SparseRows phi = ctx_.features.encode(s);
  return core::select_action_optimistic(q_.live().values(phi).col(0), ensemble_.bonus(phi).col(0),
                                        ctx_.config.c, policy_rng_);
}

std::vector<int> VbeAgent::next_actions(const core::EncodedBatch& batch) {
  Eigen::MatrixXd score = q_.live().values(batch.phi_next);
  if (ctx_.config.target_policy == core::TargetPolicy::optimistic && ctx_.config.c != 0.0) {
    score += ctx_.config.c * ensemble_.bonus(batch.phi_next);
  }
  return core::argmax_columns(score, policy_rng_);
}

void VbeAgent::observe(const core::Transition& t) {
  buffer_.add(t);
  const auto sample = buffer_.sample(ctx_.config.batch_size, replay_rng_);
  const core::EncodedBatch batch = core::encode_batch(sample, ctx_.features);
  core::ddqn_update(q_.live(), q_.frozen(), q_.optimizer(), batch, next_actions(batch));

  // the predictor gets its own batch
  const int i = uniform_int(ensemble_rng_, 0, ensemble_.size() - 1);
  ++counts_[i];
  const auto rqf_sample = buffer_.sample(ctx_.config.batch_size, replay_rng_);
  const core::EncodedBatch rqf_batch = core::encode_batch(rqf_sample, ctx_.features);
  if (loss_ == PredictorLoss::td) {
    ensemble_.td_update(i, rqf_batch, next_actions(rqf_batch));
  } else {
    ensemble_.supervised_update(i, rqf_batch);
  }

  if (q_.tick()) ensemble_.sync();
}

}  // namespace vbe::explore
