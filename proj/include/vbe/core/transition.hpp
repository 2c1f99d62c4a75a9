#pragma once

#include "vbe/common/types.hpp"

namespace vbe::core {

/// One interaction (s, a, r, s', gamma). `discount` is the full bootstrap
/// multiplier: the agent's discount times the environment's 0/1 continuation.
struct Transition {
  Observation s;
  int a = 0;
  double r = 0.0;
  Observation s_next;
  double discount = 1.0;
};

}  // namespace vbe::core
