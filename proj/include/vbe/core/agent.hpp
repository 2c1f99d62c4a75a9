#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "vbe/approx/features.hpp"
#include "vbe/approx/mlp.hpp"
#include "vbe/common/random.hpp"
#include "vbe/common/types.hpp"
#include "vbe/core/agent_config.hpp"
#include "vbe/core/transition.hpp"

namespace vbe::core {

/// Shape shared by every network an agent builds (q, ensemble members,
/// priors): the feature map's output feeds `hidden` rectifier layers.
struct NetworkSpec {
  std::vector<int> hidden;
  bool bias = false;
  approx::InitScheme init{};
};

/// Everything an agent needs from its surroundings.
struct AgentContext {
  approx::FeatureMap features;
  int num_actions = 2;
  NetworkSpec network;
  AgentConfig config;
  std::uint64_t seed = 0;
  std::uint64_t run = 0;

  approx::Architecture architecture(int outputs) const;
  /// Freshly initialized network with `outputs` heads.
  approx::Mlp make_network(int outputs, Rng& rng) const;
  Rng rng(Stream s) const { return make_rng(seed, run, s); }
};

class Agent {
 public:
  virtual ~Agent() = default;

  virtual std::string name() const = 0;
  virtual void begin_episode() {}
  virtual int act(const Observation& s) = 0;
  /// Stores the transition and runs this step's learning updates.
  virtual void observe(const Transition& t) = 0;
  /// Main action values at s.
  virtual Eigen::VectorXd action_values(const Observation& s) const = 0;
};

}  // namespace vbe::core
