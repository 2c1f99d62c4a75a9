#pragma once

#include <memory>
#include <string>

#include "vbe/common/random.hpp"
#include "vbe/common/types.hpp"

namespace vbe::envs {

/// Result of one environment transition. Episodic termination is carried by
/// the discount: discount == 0 exactly when terminal is set.
struct EnvStep {
  double reward = 0.0;
  Observation next_obs;
  double discount = 1.0;
  bool terminal = false;
};

class Environment {
 public:
  virtual ~Environment() = default;

  virtual std::string name() const = 0;
  virtual int num_actions() const = 0;
  virtual const Box& box() const = 0;
  int obs_dim() const { return static_cast<int>(box().dim()); }

  /// Continuing tasks never terminate and are never reset by the runner.
  virtual bool continuing() const { return false; }
  /// Step cutoff for episodic tasks, 0 when the task has its own horizon.
  /// Hitting the cutoff truncates the episode without a zero discount.
  virtual int max_episode_steps() const { return 0; }

  virtual Observation reset(Rng& rng) = 0;
  virtual EnvStep step(int action, Rng& rng) = 0;
};

}  // namespace vbe::envs
