#include "vbe/envs/deepsea.hpp"

#include <algorithm>
#include <string>

#include "vbe/common/errors.hpp"

namespace vbe::envs {

int deepsea_state_index(int row, int col, int grid_size) {
  if (row >= grid_size) return -1;
  if (row < 0 || col < 0 || col > row) {
    throw InvalidParameter("deepsea: (" + std::to_string(row) + "," + std::to_string(col) +
                           ") is not a reachable cell");
  }
  return row * (row + 1) / 2 + col;
}

DeepseaState deepsea_reset(int grid_size) {
  if (grid_size < 1) throw InvalidParameter("deepsea: grid_size must be >= 1");
  return DeepseaState{0, 0, grid_size};
}

DeepseaTransition deepsea_step(const DeepseaState& state, DeepseaAction action, bool reward_free) {
  if (state.terminal()) throw ContractViolation("deepsea: step called on a finished episode");
  const int n = state.grid_size;

  DeepseaTransition out;
  out.next.grid_size = n;
  out.next.row = state.row + 1;
  // Bumping into a wall keeps the column; the row always advances.
  const int dc = action == DeepseaAction::right ? 1 : -1;
  out.next.col = std::clamp(state.col + dc, 0, std::min(state.row + 1, n - 1));

  double reward = 0.0;
  if (action == DeepseaAction::right) {
    const bool corner = state.row == n - 1 && state.col == n - 1;
    reward = corner ? 1.0 : -0.01 / n;
  }
  out.step.reward = reward_free ? 0.0 : reward;
  out.step.terminal = out.next.terminal();
  out.step.discount = out.step.terminal ? 0.0 : 1.0;
  out.step.next_obs = {static_cast<double>(out.next.row), static_cast<double>(out.next.col)};
  return out;
}

Deepsea::Deepsea(int grid_size, bool reward_free)
    : state_(deepsea_reset(grid_size)),
      reward_free_(reward_free),
      box_{{0.0, 0.0}, {static_cast<double>(grid_size), static_cast<double>(grid_size)}} {}

Observation Deepsea::reset(Rng&) {
  state_ = deepsea_reset(state_.grid_size);
  return {0.0, 0.0};
}

EnvStep Deepsea::step(int action, Rng&) {
  if (action != 0 && action != 1) throw InvalidParameter("deepsea: action must be 0 or 1");
  auto t = deepsea_step(state_, static_cast<DeepseaAction>(action), reward_free_);
  state_ = t.next;
  return std::move(t.step);
}

}  // namespace vbe::envs
