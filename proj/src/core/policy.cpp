#include "vbe/core/policy.hpp"

#include "vbe/common/errors.hpp"
#include "vbe/core/ddqn.hpp"

namespace vbe::core {

int select_action_optimistic(const Eigen::Ref<const Eigen::VectorXd>& q,
                             const Eigen::Ref<const Eigen::VectorXd>& bonus, double c, Rng& rng) {
  if (c < 0.0) throw InvalidParameter("bonus scale must be >= 0");
  if (q.size() != bonus.size()) throw InvalidParameter("q and bonus sizes differ");
  if (c == 0.0) return argmax_random_tie(q, rng);
  const Eigen::VectorXd score = q + c * bonus;
  return argmax_random_tie(score, rng);
}

int select_action_epsgreedy(const Eigen::Ref<const Eigen::VectorXd>& q, double epsilon, Rng& rng) {
  if (epsilon < 0.0 || epsilon > 1.0) throw InvalidParameter("epsilon must lie in [0, 1]");
  if (epsilon > 0.0 && bernoulli(rng, epsilon)) return uniform_int(rng, 0, static_cast<int>(q.size()) - 1);
  return argmax_random_tie(q, rng);
}

}  // namespace vbe::core
