#pragma once

#include "vbe/envs/environment.hpp"

namespace vbe::envs {

// Observation 0 is upstream (high reward), 1 is downstream.
enum class RiverAction { up = 0, down = 1 };

struct RiverSwimParams {
  double p_switch = 0.3;        // probability an up action is executed as down
  double step_mean = 0.1;
  double noise_std = 0.01;
  double upstream_edge = 0.05;  // up taken from [0, upstream_edge] pays upstream_reward
  double downstream_edge = 0.95;  // down taken from [downstream_edge, 1] pays downstream_reward
  double upstream_reward = 1.0;
  double downstream_reward = 0.005;
  double start_low = 0.9;
  double start_high = 1.0;
};

double riverswim_reset(const RiverSwimParams& params, Rng& rng);

/// One move. The reward is decided by the chosen action and the state it was
/// chosen in; the switch only affects where the agent ends up.
EnvStep riverswim_step(double x, RiverAction action, const RiverSwimParams& params, Rng& rng);

class RiverSwim final : public Environment {
 public:
  explicit RiverSwim(RiverSwimParams params = {});

  std::string name() const override { return "riverswim"; }
  int num_actions() const override { return 2; }
  const Box& box() const override { return box_; }
  bool continuing() const override { return true; }

  Observation reset(Rng& rng) override;
  EnvStep step(int action, Rng& rng) override;

  double position() const { return x_; }
  const RiverSwimParams& params() const { return params_; }

 private:
  RiverSwimParams params_;
  Box box_{{0.0}, {1.0}};
  double x_ = 1.0;
};

}  // namespace vbe::envs
