#pragma once

#include <array>

#include "vbe/envs/environment.hpp"

namespace vbe::envs {

enum class CarAction { reverse = 0, coast = 1, forward = 2 };

struct MountainCarParams {
  double min_position = -1.2;
  double max_position = 0.6;
  double max_speed = 0.07;
  double goal_position = 0.5;
  double force = 0.001;
  double gravity = 0.0025;
  int max_episode_steps = 1000;
};

/// Classic dynamics with the sparse reward: 1 on reaching the goal, 0 otherwise.
/// state = {position, velocity}.
EnvStep mountaincar_step(std::array<double, 2> state, CarAction action,
                         const MountainCarParams& params = {});

class MountainCar final : public Environment {
 public:
  explicit MountainCar(MountainCarParams params = {});

  std::string name() const override { return "mountaincar_sparse"; }
  int num_actions() const override { return 3; }
  const Box& box() const override { return box_; }
  int max_episode_steps() const override { return params_.max_episode_steps; }

  Observation reset(Rng& rng) override;
  EnvStep step(int action, Rng& rng) override;

 private:
  MountainCarParams params_;
  Box box_;
  std::array<double, 2> state_{-0.5, 0.0};
  bool done_ = false;
};

}  // namespace vbe::envs
