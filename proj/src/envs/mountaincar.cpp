#include "vbe/envs/mountaincar.hpp"

#include <algorithm>
#include <cmath>

#include "vbe/common/errors.hpp"

namespace vbe::envs {

EnvStep mountaincar_step(std::array<double, 2> state, CarAction action,
                         const MountainCarParams& params) {
  auto [position, velocity] = state;
  const double push = static_cast<double>(static_cast<int>(action) - 1);
  velocity += params.force * push - params.gravity * std::cos(3.0 * position);
  velocity = std::clamp(velocity, -params.max_speed, params.max_speed);
  position = std::clamp(position + velocity, params.min_position, params.max_position);
  if (position == params.min_position && velocity < 0.0) velocity = 0.0;

  EnvStep out;
  out.next_obs = {position, velocity};
  out.terminal = position >= params.goal_position;
  out.reward = out.terminal ? 1.0 : 0.0;
  out.discount = out.terminal ? 0.0 : 1.0;
  return out;
}

MountainCar::MountainCar(MountainCarParams params)
    : params_(params),
      box_{{params.min_position, -params.max_speed}, {params.max_position, params.max_speed}} {}

Observation MountainCar::reset(Rng& rng) {
  state_ = {uniform(rng, -0.6, -0.4), 0.0};
  done_ = false;
  return {state_[0], state_[1]};
}

EnvStep MountainCar::step(int action, Rng&) {
  if (done_) throw ContractViolation("mountaincar: step called on a finished episode");
  if (action < 0 || action > 2) throw InvalidParameter("mountaincar: action must be in [0, 2]");
  auto out = mountaincar_step(state_, static_cast<CarAction>(action), params_);
  state_ = {out.next_obs[0], out.next_obs[1]};
  done_ = out.terminal;
  return out;
}

}  // namespace vbe::envs
