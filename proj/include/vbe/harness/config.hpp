#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "vbe/approx/features.hpp"
#include "vbe/core/agent.hpp"
#include "vbe/envs/factory.hpp"

namespace vbe::harness {

enum class FeatureRegime { tabular, tile_linear, mlp };
enum class Metric { return_undiscounted, return_discounted, cumulative_reward, coverage };

FeatureRegime parse_regime(const std::string& s);
std::string to_string(FeatureRegime r);
Metric parse_metric(const std::string& s);
std::string to_string(Metric m);

struct FeatureSpec {
  FeatureRegime regime = FeatureRegime::mlp;
  int tiles = 4;
  int tilings = 32;
  int size = 128;
  std::vector<int> hidden{50, 50};  // mlp regime only
  bool bias = true;
  approx::InitScheme init{};
};

struct ExperimentConfig {
  envs::EnvSpec env;
  std::string agent = "vbe";
  core::AgentConfig agent_config;
  FeatureSpec features;
  long steps = 0;     // step budget; used when episodes == 0
  long episodes = 0;  // episode budget for episodic tasks
  int runs = 1;
  std::uint64_t seed = 0;
  bool stop_at_full_coverage = false;
  Metric metric = Metric::return_undiscounted;
  int log_interval = 100;  // continuing tasks, in steps
  std::string output = "out";
};

/// Budgets, run counts, metric and feature settings conventional for `env`.
ExperimentConfig default_config(const std::string& env);

/// Sets the regime and its default tile/bias settings for cfg.env.
void apply_regime(ExperimentConfig& cfg, FeatureRegime regime);

/// INI text with sections [env], [agent], [training], [logging]. Keys not
/// given keep default_config(env.name) values. Throws ConfigError naming the
/// offending key for unknown keys or unparsable values.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Round-trippable INI rendering.
std::string to_ini(const ExperimentConfig& cfg);

/// Feature map for the configured environment and regime.
approx::FeatureMap make_features(const ExperimentConfig& cfg, const envs::Environment& env);

/// Agent context for run `run` of master seed `seed`.
core::AgentContext make_context(const ExperimentConfig& cfg, const envs::Environment& env, std::uint64_t seed,
                                std::uint64_t run);

}  // namespace vbe::harness
