#include "vbe/explore/rqf_ensemble.hpp"

#include "vbe/common/errors.hpp"

namespace vbe::explore {

Eigen::MatrixXd ensemble_bonus(std::span<const Eigen::MatrixXd> predictions,
                               std::span<const Eigen::MatrixXd> targets) {
  if (predictions.empty() || predictions.size() != targets.size()) {
    throw InvalidParameter("ensemble_bonus: need matching, nonempty prediction and target lists");
  }
  Eigen::MatrixXd out = (predictions[0] - targets[0]).cwiseAbs();
  for (std::size_t i = 1; i < predictions.size(); ++i) {
    out = out.cwiseMax((predictions[i] - targets[i]).cwiseAbs());
  }
  return out;
}

RqfEnsemble::RqfEnsemble(const core::AgentContext& ctx, Rng& init_rng) {
  const int k = ctx.config.k;
  if (k < 1) throw InvalidParameter("ensemble size must be >= 1");
  targets_.reserve(k);
  predictors_.reserve(k);
  for (int i = 0; i < k; ++i) {
    targets_.push_back(ctx.make_network(ctx.num_actions, init_rng));
    predictors_.emplace_back(ctx.make_network(ctx.num_actions, init_rng), ctx.config.optimizer_config(),
                             ctx.config.tau);
  }
}

void RqfEnsemble::check_index(int i) const {
  if (i < 0 || i >= size()) throw InvalidParameter("ensemble index out of range");
}

void RqfEnsemble::set_predictor(int i, const Eigen::VectorXd& params) {
  check_index(i);
  predictors_[i].live().set_params(params);
  predictors_[i].sync();
}

void RqfEnsemble::set_target(int i, const Eigen::VectorXd& params) {
  check_index(i);
  targets_[i].set_params(params);
}

Eigen::MatrixXd RqfEnsemble::bonus(const approx::SparseRows& phi) const {
  Eigen::MatrixXd out;
  for (int i = 0; i < size(); ++i) {
    Eigen::MatrixXd gap = (predictors_[i].live().values(phi) - targets_[i].values(phi)).cwiseAbs();
    out = i == 0 ? std::move(gap) : out.cwiseMax(gap).eval();
  }
  return out;
}

Eigen::VectorXd RqfEnsemble::rewards(int i, const core::EncodedBatch& batch,
                                     std::span<const int> next_actions) const {
  check_index(i);
  const Eigen::MatrixXd now = targets_[i].values(batch.phi);
  const Eigen::MatrixXd next = targets_[i].values(batch.phi_next);
  Eigen::VectorXd r(batch.size());
  for (int j = 0; j < batch.size(); ++j) {
    r[j] = now(batch.actions[j], j);
    if (batch.discounts[j] != 0.0) r[j] -= batch.discounts[j] * next(next_actions[j], j);
  }
  return r;
}

double RqfEnsemble::td_update(int i, const core::EncodedBatch& batch, std::span<const int> next_actions) {
  const Eigen::VectorXd r = rewards(i, batch, next_actions);
  core::TargetNetPair& p = predictors_[i];
  const Eigen::VectorXd y = core::bootstrap_targets(p.frozen(), batch.phi_next, next_actions,
                                                    {r.data(), static_cast<std::size_t>(r.size())},
                                                    batch.discounts);
  return core::td_step(p.live(), p.optimizer(), batch.phi, batch.actions,
                       {y.data(), static_cast<std::size_t>(y.size())});
}

double RqfEnsemble::supervised_update(int i, const core::EncodedBatch& batch) {
  check_index(i);
  const Eigen::MatrixXd f = targets_[i].values(batch.phi);
  std::vector<double> y(batch.size());
  for (int j = 0; j < batch.size(); ++j) y[j] = f(batch.actions[j], j);
  core::TargetNetPair& p = predictors_[i];
  return core::regression_step(p.live(), p.optimizer(), batch.phi, batch.actions, y);
}

void RqfEnsemble::sync() {
  for (auto& p : predictors_) p.sync();
}

}  // namespace vbe::explore
