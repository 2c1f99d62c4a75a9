#include "vbe/envs/puddleworld.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vbe/common/errors.hpp"

namespace vbe::envs {

double distance_to_segment(double x, double y, const Segment& s) {
  const double dx = s.b[0] - s.a[0];
  const double dy = s.b[1] - s.a[1];
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(((x - s.a[0]) * dx + (y - s.a[1]) * dy) / len2, 0.0, 1.0);
  return std::hypot(x - (s.a[0] + t * dx), y - (s.a[1] + t * dy));
}

double puddle_penalty(double x, double y, const PuddleWorldParams& params) {
  double nearest = std::numeric_limits<double>::infinity();
  for (const auto& p : params.puddles) nearest = std::min(nearest, distance_to_segment(x, y, p));
  if (nearest >= params.puddle_radius) return 0.0;
  return -params.penalty_scale * (params.puddle_radius - nearest);
}

EnvStep puddleworld_step(std::array<double, 2> pos, PuddleAction action,
                         const PuddleWorldParams& params, Rng& rng) {
  double displacement = params.step_mean;
  if (params.noise_std > 0.0) displacement += normal(rng, 0.0, params.noise_std);

  switch (action) {
    case PuddleAction::up: pos[1] += displacement; break;
    case PuddleAction::down: pos[1] -= displacement; break;
    case PuddleAction::left: pos[0] -= displacement; break;
    case PuddleAction::right: pos[0] += displacement; break;
  }
  pos[0] = std::clamp(pos[0], 0.0, 1.0);
  pos[1] = std::clamp(pos[1], 0.0, 1.0);

  EnvStep out;
  out.next_obs = {pos[0], pos[1]};
  out.reward = params.step_reward + puddle_penalty(pos[0], pos[1], params);
  out.terminal = pos[0] >= params.goal_edge && pos[1] >= params.goal_edge;
  out.discount = out.terminal ? 0.0 : 1.0;
  return out;
}

PuddleWorld::PuddleWorld(PuddleWorldParams params) : params_(params) {}

Observation PuddleWorld::reset(Rng& rng) {
  pos_ = {uniform(rng, 0.1, 0.3), uniform(rng, 0.45, 0.65)};
  done_ = false;
  return {pos_[0], pos_[1]};
}

EnvStep PuddleWorld::step(int action, Rng& rng) {
  if (done_) throw ContractViolation("puddleworld: step called on a finished episode");
  if (action < 0 || action > 3) throw InvalidParameter("puddleworld: action must be in [0, 3]");
  auto out = puddleworld_step(pos_, static_cast<PuddleAction>(action), params_, rng);
  pos_ = {out.next_obs[0], out.next_obs[1]};
  done_ = out.terminal;
  return out;
}

}  // namespace vbe::envs
