#include "vbe/core/ddqn.hpp"

#include "vbe/common/errors.hpp"

namespace vbe::core {

EncodedBatch encode_batch(std::span<const Transition* const> batch, const approx::FeatureMap& features) {
  EncodedBatch out{approx::SparseRows(features.output_dim()), approx::SparseRows(features.output_dim()),
                   {}, {}, {}};
  out.actions.reserve(batch.size());
  out.rewards.reserve(batch.size());
  out.discounts.reserve(batch.size());
  for (const Transition* t : batch) {
    features.encode(t->s, out.phi);
    features.encode(t->s_next, out.phi_next);
    out.actions.push_back(t->a);
    out.rewards.push_back(t->r);
    out.discounts.push_back(t->discount);
  }
  return out;
}

TargetNetPair::TargetNetPair(approx::Mlp live, approx::OptimizerConfig optimizer, int period)
    : live_(std::move(live)), frozen_(live_), optimizer_(optimizer, live_.num_params()), period_(period) {
  if (period_ < 1) throw InvalidParameter("target network period must be >= 1");
}

void TargetNetPair::sync() {
  frozen_.set_params(live_.params());
  since_sync_ = 0;
}

bool TargetNetPair::tick() {
  if (++since_sync_ < period_) return false;
  sync();
  return true;
}

int argmax_random_tie(const Eigen::Ref<const Eigen::VectorXd>& values, Rng& rng) {
  const Eigen::Index n = values.size();
  if (n == 0) throw InvalidParameter("argmax over an empty vector");
  double best = values[0];
  int count = 1;
  for (Eigen::Index i = 1; i < n; ++i) {
    if (values[i] > best) {
      best = values[i];
      count = 1;
    } else if (values[i] == best) {
      ++count;
    }
  }
  int pick = count == 1 ? 0 : uniform_int(rng, 0, count - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (values[i] == best && pick-- == 0) return static_cast<int>(i);
  }
  return 0;  // unreachable
}

std::vector<int> argmax_columns(const Eigen::MatrixXd& values, Rng& rng) {
  std::vector<int> out(values.cols());
  for (Eigen::Index j = 0; j < values.cols(); ++j) out[j] = argmax_random_tie(values.col(j), rng);
  return out;
}

Eigen::VectorXd bootstrap_targets(const approx::Mlp& evaluator, const approx::SparseRows& phi_next,
                                  std::span<const int> next_actions, std::span<const double> rewards,
                                  std::span<const double> discounts) {
  const Eigen::MatrixXd next = evaluator.values(phi_next);
  Eigen::VectorXd targets(next.cols());
  for (Eigen::Index j = 0; j < next.cols(); ++j) {
    targets[j] = rewards[j];
    if (discounts[j] != 0.0) targets[j] += discounts[j] * next(next_actions[j], j);
  }
  return targets;
}

namespace {

double masked_step(approx::Mlp& net, approx::Optimizer& opt, const approx::SparseRows& phi,
                   std::span<const int> actions, std::span<const double> targets, double scale) {
  const int batch = phi.rows();
  if (batch == 0) throw InvalidParameter("update on an empty batch");
  if (static_cast<int>(actions.size()) != batch || static_cast<int>(targets.size()) != batch) {
    throw InvalidParameter("update: batch arrays disagree in length");
  }
  const Eigen::MatrixXd pred = net.forward_cached(phi);
  Eigen::MatrixXd grad_out = Eigen::MatrixXd::Zero(pred.rows(), pred.cols());
  double loss = 0.0;
  for (int j = 0; j < batch; ++j) {
    const double err = targets[j] - pred(actions[j], j);
    loss += err * err;
    grad_out(actions[j], j) = -2.0 * scale * err / batch;
  }
  const Eigen::VectorXd grad = net.backward(grad_out);
  opt.step(net.mutable_params(), grad);
  return scale * loss / batch;
}

}  // namespace

double td_step(approx::Mlp& net, approx::Optimizer& opt, const approx::SparseRows& phi,
               std::span<const int> actions, std::span<const double> targets) {
  return masked_step(net, opt, phi, actions, targets, 0.5);
}

double regression_step(approx::Mlp& net, approx::Optimizer& opt, const approx::SparseRows& phi,
                       std::span<const int> actions, std::span<const double> targets) {
  return masked_step(net, opt, phi, actions, targets, 1.0);
}

double ddqn_target(const approx::Mlp& live, const approx::Mlp& frozen,
                   const approx::FeatureMap& features, const Transition& t, Rng& tie_rng) {
  if (t.discount == 0.0) return t.r;
  const approx::SparseRows phi = features.encode(t.s_next);
  const int a_star = argmax_random_tie(live.values(phi).col(0), tie_rng);
  return t.r + t.discount * frozen.values(phi)(a_star, 0);
}

double ddqn_update(approx::Mlp& live, const approx::Mlp& frozen, approx::Optimizer& opt,
                   const EncodedBatch& batch, std::span<const int> next_actions) {
  const Eigen::VectorXd targets =
      bootstrap_targets(frozen, batch.phi_next, next_actions, batch.rewards, batch.discounts);
  return td_step(live, opt, batch.phi, batch.actions, {targets.data(), static_cast<std::size_t>(targets.size())});
}

double ddqn_update(approx::Mlp& live, const approx::Mlp& frozen, approx::Optimizer& opt,
                   const EncodedBatch& batch, Rng& tie_rng) {
  const std::vector<int> next = argmax_columns(live.values(batch.phi_next), tie_rng);
  return ddqn_update(live, frozen, opt, batch, next);
}

}  // namespace vbe::core
