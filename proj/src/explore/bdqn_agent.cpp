#include "vbe/explore/bdqn_agent.hpp"

namespace vbe::explore {

BdqnAgent::BdqnAgent(core::AgentContext ctx, bool resample_heads)
    : ctx_(std::move(ctx)),
      resample_(resample_heads),
      init_rng_(ctx_.rng(Stream::agent_init)),
      replay_rng_(ctx_.rng(Stream::replay)),
      policy_rng_(ctx_.rng(Stream::policy)),
      head_rng_(ctx_.rng(Stream::head)),
      buffer_(ctx_.config.buffer_capacity) {
  ctx_.config.validate();
  const int k = resample_ ? ctx_.config.k : 1;
  heads_.reserve(k);
  for (int h = 0; h < k; ++h) {
    approx::Mlp f = ctx_.make_network(ctx_.num_actions, init_rng_);
    approx::Mlp p = ctx_.make_network(ctx_.num_actions, init_rng_);
    heads_.push_back(PriorHead{core::TargetNetPair(std::move(f), ctx_.config.optimizer_config(), ctx_.config.tau),
                               std::move(p)});
  }
}

void BdqnAgent::begin_episode() {
  if (resample_) active_ = uniform_int(head_rng_, 0, num_heads() - 1);
}

Eigen::MatrixXd BdqnAgent::composed(int h, const approx::SparseRows& phi, bool frozen) const {
  const PriorHead& head = heads_.at(h);
  const approx::Mlp& f = frozen ? head.f.frozen() : head.f.live();
  Eigen::MatrixXd v = f.values(phi);
  if (ctx_.config.c != 0.0) v += ctx_.config.c * head.prior.values(phi);
  return v;
}

Eigen::VectorXd BdqnAgent::action_values(const Observation& s) const {
  return composed(active_, ctx_.features.encode(s)).col(0);
}

int BdqnAgent::act(const Observation& s) {
  return core::argmax_random_tie(action_values(s), policy_rng_);
}

void BdqnAgent::observe(const core::Transition& t) {
  buffer_.add(t);
  const auto sample = buffer_.sample(ctx_.config.batch_size, replay_rng_);
  const core::EncodedBatch batch = core::encode_batch(sample, ctx_.features);
  const double c = ctx_.config.c;
  const int m = batch.size();

  for (int h = 0; h < num_heads(); ++h) {
    PriorHead& head = heads_[h];
    const std::vector<int> next = core::argmax_columns(composed(h, batch.phi_next), policy_rng_);
    const Eigen::MatrixXd bootstrap = composed(h, batch.phi_next, true);
    const Eigen::MatrixXd prior_now = head.prior.values(batch.phi);
    // The prior is frozen, so the composed target reduces to a target for f.
    std::vector<double> y(m);
    for (int j = 0; j < m; ++j) {
      y[j] = batch.rewards[j] - c * prior_now(batch.actions[j], j);
      if (batch.discounts[j] != 0.0) y[j] += batch.discounts[j] * bootstrap(next[j], j);
    }
    core::td_step(head.f.live(), head.f.optimizer(), batch.phi, batch.actions, y);
    head.f.tick();
  }
}

}  // namespace vbe::explore
