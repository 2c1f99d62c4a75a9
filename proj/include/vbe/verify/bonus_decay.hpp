#pragma once

#include <cstdint>

namespace vbe::verify {

/// Chain of `chain_length` states; action 0 moves left (sticky at 0),
/// action 1 moves right and leaving the last state ends the episode. The
/// behavior policy is uniform; bootstrap actions are greedy in a fixed
/// random q. One uniformly chosen predictor gets one TD update per step.
struct BonusDecayConfig {
  int chain_length = 5;
  int k = 1;
  long steps = 100000;
  double learning_rate = 1.0;  // plain SGD
  int batch_size = 32;
  int tau = 4;
  double gamma = 0.9;
  bool init_equal = false;  // start every predictor at its target
  std::uint64_t seed = 0;
};

struct BonusDecayResult {
  double initial_bonus = 0.0;  // max over (s, a) before training
  double final_bonus = 0.0;    // max over (s, a) after training
};

BonusDecayResult check_bonus_decay(const BonusDecayConfig& cfg);

}  // namespace vbe::verify
