#pragma once

#include <array>

#include "vbe/envs/environment.hpp"

namespace vbe::envs {

enum class PuddleAction { up = 0, down = 1, left = 2, right = 3 };

struct Segment {
  std::array<double, 2> a;
  std::array<double, 2> b;
};

struct PuddleWorldParams {
  double step_mean = 0.005;
  double noise_std = 0.1;
  double step_reward = -1.0;
  double puddle_radius = 0.1;
  double penalty_scale = 400.0;
  double goal_edge = 0.95;
  std::array<Segment, 2> puddles{{{{0.45, 0.4}, {0.45, 0.8}}, {{0.1, 0.75}, {0.45, 0.75}}}};
  int max_episode_steps = 1000;
};

double distance_to_segment(double x, double y, const Segment& s);

/// Non-positive penalty from the nearest puddle: -scale * (radius - d) inside
/// the radius, zero outside.
double puddle_penalty(double x, double y, const PuddleWorldParams& params);

EnvStep puddleworld_step(std::array<double, 2> pos, PuddleAction action,
                         const PuddleWorldParams& params, Rng& rng);

class PuddleWorld final : public Environment {
 public:
  explicit PuddleWorld(PuddleWorldParams params = {});

  std::string name() const override { return "puddleworld"; }
  int num_actions() const override { return 4; }
  const Box& box() const override { return box_; }
  int max_episode_steps() const override { return params_.max_episode_steps; }

  Observation reset(Rng& rng) override;
  EnvStep step(int action, Rng& rng) override;

 private:
  PuddleWorldParams params_;
  Box box_{{0.0, 0.0}, {1.0, 1.0}};
  std::array<double, 2> pos_{0.2, 0.55};
  bool done_ = false;
};

}  // namespace vbe::envs
