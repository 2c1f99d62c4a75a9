#include "vbe/verify/bonus_decay.hpp"

#include "vbe/common/errors.hpp"
#include "vbe/core/replay_buffer.hpp"
#include "vbe/verify/propositions.hpp"

namespace vbe::verify {

namespace {

double max_bonus(const explore::RqfEnsemble& ens, int states) {
  approx::SparseRows all(states);
  for (int s = 0; s < states; ++s) {
    all.push(s, 1.0);
    all.close_row();
  }
  return ens.bonus(all).maxCoeff();
}

}  // namespace

BonusDecayResult check_bonus_decay(const BonusDecayConfig& cfg) {
  const int L = cfg.chain_length;
  if (L < 1 || cfg.k < 1 || cfg.steps < 0 || cfg.batch_size < 1 || cfg.tau < 1) {
    throw InvalidParameter("bonus decay: invalid configuration");
  }
  core::AgentContext ctx{tabular_features(L), 2, {{}, false, {}}, {}, cfg.seed, 0};
  ctx.config.k = cfg.k;
  ctx.config.tau = cfg.tau;
  ctx.config.learning_rate = cfg.learning_rate;
  ctx.config.optimizer = approx::OptimizerKind::sgd;
  ctx.config.batch_size = cfg.batch_size;

  Rng init_rng = ctx.rng(Stream::agent_init);
  Rng env_rng = ctx.rng(Stream::env);
  Rng replay_rng = ctx.rng(Stream::replay);
  Rng pick_rng = ctx.rng(Stream::ensemble);
  Rng tie_rng = ctx.rng(Stream::policy);

  explore::RqfEnsemble ens(ctx, init_rng);
  if (cfg.init_equal) {
    for (int i = 0; i < ens.size(); ++i) ens.set_predictor(i, ens.target(i).params());
  }
  const approx::Mlp q = ctx.make_network(2, init_rng);

  BonusDecayResult out;
  out.initial_bonus = max_bonus(ens, L);

  core::ReplayBuffer buffer(core::kDefaultReplayCapacity);
  int s = 0;
  for (long t = 0; t < cfg.steps; ++t) {
    const int a = uniform_int(env_rng, 0, 1);
    int s2 = a == 0 ? std::max(s - 1, 0) : s + 1;
    const bool done = s2 == L;
    buffer.add(core::Transition{{double(s)}, a, 0.0, {double(s2)}, done ? 0.0 : cfg.gamma});
    s = done ? 0 : s2;

    const auto sample = buffer.sample(cfg.batch_size, replay_rng);
    const core::EncodedBatch batch = core::encode_batch(sample, ctx.features);
    const std::vector<int> next = core::argmax_columns(q.values(batch.phi_next), tie_rng);
    ens.td_update(uniform_int(pick_rng, 0, ens.size() - 1), batch, next);
    if ((t + 1) % cfg.tau == 0) ens.sync();
  }
  out.final_bonus = max_bonus(ens, L);
  return out;
}

}  // namespace vbe::verify
