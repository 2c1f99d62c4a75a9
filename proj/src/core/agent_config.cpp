#include "vbe/core/agent_config.hpp"

#include "vbe/common/errors.hpp"

namespace vbe::core {

TargetPolicy parse_target_policy(const std::string& s) {
  if (s == "greedy") return TargetPolicy::greedy;
  if (s == "optimistic") return TargetPolicy::optimistic;
  throw InvalidParameter("target policy must be 'greedy' or 'optimistic', got '" + s + "'");
}

std::string to_string(TargetPolicy p) {
  return p == TargetPolicy::greedy ? "greedy" : "optimistic";
}

approx::OptimizerConfig AgentConfig::optimizer_config() const {
  approx::OptimizerConfig cfg;
  cfg.kind = optimizer;
  cfg.learning_rate = learning_rate;
  return cfg;
}

void AgentConfig::validate() const {
  if (k < 1) throw InvalidParameter("k must be >= 1");
  if (c < 0.0) throw InvalidParameter("c must be >= 0");
  if (tau < 1) throw InvalidParameter("tau must be >= 1");
  if (batch_size < 1) throw InvalidParameter("batch_size must be >= 1");
  if (learning_rate < 0.0) throw InvalidParameter("learning_rate must be >= 0");
  if (gamma < 0.0 || gamma > 1.0) throw InvalidParameter("gamma must lie in [0, 1]");
  if (epsilon < 0.0 || epsilon > 1.0) throw InvalidParameter("epsilon must lie in [0, 1]");
  if (buffer_capacity < 1) throw InvalidParameter("buffer_capacity must be >= 1");
  if (rnd_embedding < 1) throw InvalidParameter("rnd_embedding must be >= 1");
}

}  // namespace vbe::core
