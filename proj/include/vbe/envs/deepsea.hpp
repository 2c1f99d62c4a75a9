#pragma once

#include "vbe/envs/environment.hpp"

namespace vbe::envs {

enum class DeepseaAction { left = 0, right = 1 };

/// Position in the N x N grid. Rows 0..N-1 are live; row N is the absorbing
/// state reached after the last move.
struct DeepseaState {
  int row = 0;
  int col = 0;
  int grid_size = 1;

  bool terminal() const { return row >= grid_size; }
  bool operator==(const DeepseaState&) const = default;
};

struct DeepseaTransition {
  DeepseaState next;
  EnvStep step;
};

/// Number of reachable (row, col) pairs, N(N+1)/2.
constexpr int deepsea_state_count(int grid_size) { return grid_size * (grid_size + 1) / 2; }

/// Row-major index of (row, col) within the lower triangle; -1 for the
/// absorbing row.
int deepsea_state_index(int row, int col, int grid_size);

DeepseaState deepsea_reset(int grid_size);
DeepseaTransition deepsea_step(const DeepseaState& state, DeepseaAction action, bool reward_free);

/// Observation is (row, col) as reals.
class Deepsea final : public Environment {
 public:
  Deepsea(int grid_size, bool reward_free);

  std::string name() const override { return reward_free_ ? "deepsea_pure" : "deepsea"; }
  int num_actions() const override { return 2; }
  const Box& box() const override { return box_; }

  Observation reset(Rng& rng) override;
  EnvStep step(int action, Rng& rng) override;

  const DeepseaState& state() const { return state_; }
  int grid_size() const { return state_.grid_size; }

 private:
  DeepseaState state_;
  bool reward_free_;
  Box box_;
};

}  // namespace vbe::envs
