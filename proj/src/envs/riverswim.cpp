#include "vbe/envs/riverswim.hpp"

#include <algorithm>

#include "vbe/common/errors.hpp"

namespace vbe::envs {

double riverswim_reset(const RiverSwimParams& params, Rng& rng) {
  return uniform(rng, params.start_low, params.start_high);
}

EnvStep riverswim_step(double x, RiverAction action, const RiverSwimParams& params, Rng& rng) {
  double reward = 0.0;
  if (action == RiverAction::up && x <= params.upstream_edge) {
    reward = params.upstream_reward;
  } else if (action == RiverAction::down && x >= params.downstream_edge) {
    reward = params.downstream_reward;
  }

  RiverAction executed = action;
  if (action == RiverAction::up && params.p_switch > 0.0 && bernoulli(rng, params.p_switch)) {
    executed = RiverAction::down;
  }
  double displacement = params.step_mean;
  if (params.noise_std > 0.0) displacement += normal(rng, 0.0, params.noise_std);
  const double dir = executed == RiverAction::up ? -1.0 : 1.0;

  EnvStep out;
  out.reward = reward;
  out.next_obs = {std::clamp(x + dir * displacement, 0.0, 1.0)};
  out.discount = 1.0;
  out.terminal = false;
  return out;
}

RiverSwim::RiverSwim(RiverSwimParams params) : params_(params) {
  if (params_.p_switch < 0.0 || params_.p_switch > 1.0) {
    throw InvalidParameter("riverswim: p_switch must lie in [0, 1]");
  }
}

Observation RiverSwim::reset(Rng& rng) {
  x_ = riverswim_reset(params_, rng);
  return {x_};
}

EnvStep RiverSwim::step(int action, Rng& rng) {
  if (action != 0 && action != 1) throw InvalidParameter("riverswim: action must be 0 or 1");
  auto out = riverswim_step(x_, static_cast<RiverAction>(action), params_, rng);
  x_ = out.next_obs[0];
  return out;
}

}  // namespace vbe::envs
