#pragma once

#include <Eigen/Core>

#include "vbe/common/random.hpp"

namespace vbe::core {

/// argmax_a q(a) + c * bonus(a), uniform tie-break.
int select_action_optimistic(const Eigen::Ref<const Eigen::VectorXd>& q,
                             const Eigen::Ref<const Eigen::VectorXd>& bonus, double c, Rng& rng);

/// Uniform action with probability epsilon, otherwise greedy in q.
int select_action_epsgreedy(const Eigen::Ref<const Eigen::VectorXd>& q, double epsilon, Rng& rng);

}  // namespace vbe::core
