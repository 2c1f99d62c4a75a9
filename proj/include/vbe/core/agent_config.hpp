#pragma once

#include <cstddef>
#include <string>

#include "vbe/approx/optimizer.hpp"
#include "vbe/core/replay_buffer.hpp"

namespace vbe::core {

/// Which policy the bootstrap argmax follows: greedy in q, or the optimistic
/// behavior policy q + c * b.
enum class TargetPolicy { greedy, optimistic };

TargetPolicy parse_target_policy(const std::string& s);
std::string to_string(TargetPolicy p);

struct AgentConfig {
  int k = 1;                 // ensemble size
  double c = 1.0;            // bonus (or prior) scale
  int tau = 4;               // target network period, in agent steps
  int batch_size = 128;
  double learning_rate = 1e-3;
  double gamma = 0.99;
  TargetPolicy target_policy = TargetPolicy::greedy;
  double epsilon = 0.1;      // epsilon-greedy baseline only
  std::size_t buffer_capacity = kDefaultReplayCapacity;
  approx::OptimizerKind optimizer = approx::OptimizerKind::adam;
  int rnd_embedding = 64;    // RND target/predictor output width

  approx::OptimizerConfig optimizer_config() const;

  /// Throws InvalidParameter naming the first offending field.
  void validate() const;
};

}  // namespace vbe::core
