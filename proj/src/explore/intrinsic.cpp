#include "vbe/explore/intrinsic.hpp"

#include "vbe/common/errors.hpp"
#include "vbe/core/policy.hpp"

namespace vbe::explore {

IntrinsicValueHead::IntrinsicValueHead(approx::Mlp net, approx::OptimizerConfig opt, int period, double gamma)
    : net_(std::move(net), opt, period), gamma_(gamma) {}

double IntrinsicValueHead::update(const core::EncodedBatch& batch, std::span<const double> intrinsic_rewards,
                                  Rng& tie_rng) {
  const std::vector<int> next = core::argmax_columns(net_.live().values(batch.phi_next), tie_rng);
  const std::vector<double> discounts(batch.size(), gamma_);
  const Eigen::VectorXd y =
      core::bootstrap_targets(net_.frozen(), batch.phi_next, next, intrinsic_rewards, discounts);
  return core::td_step(net_.live(), net_.optimizer(), batch.phi, batch.actions,
                       {y.data(), static_cast<std::size_t>(y.size())});
}

RndModel::RndModel(const core::AgentContext& ctx, Rng& init_rng)
    : target_(ctx.make_network(ctx.config.rnd_embedding, init_rng)),
      predictor_(ctx.make_network(ctx.config.rnd_embedding, init_rng)),
      opt_(ctx.config.optimizer_config(), predictor_.num_params()) {}

Eigen::VectorXd RndModel::error(const approx::SparseRows& phi) const {
  return (predictor_.values(phi) - target_.values(phi)).colwise().squaredNorm().transpose();
}

double RndModel::fit(const approx::SparseRows& phi) {
  const Eigen::MatrixXd diff = predictor_.forward_cached(phi) - target_.values(phi);
  const double m = static_cast<double>(phi.rows());
  const Eigen::VectorXd grad = predictor_.backward(2.0 * diff / m);
  opt_.step(predictor_.mutable_params(), grad);
  return diff.squaredNorm() / m;
}

void RndModel::train(const core::EncodedBatch& batch) { fit(batch.phi_next); }

AcbModel::AcbModel(const core::AgentContext& ctx, Rng& init_rng) {
  const int k = ctx.config.k;
  for (int i = 0; i < k; ++i) {
    targets_.push_back(ctx.make_network(ctx.num_actions, init_rng));
    predictors_.push_back(ctx.make_network(ctx.num_actions, init_rng));
    opts_.emplace_back(ctx.config.optimizer_config(), predictors_.back().num_params());
  }
}

Eigen::MatrixXd AcbModel::bonus(const approx::SparseRows& phi, int members) const {
  const int n = members == 0 ? size() : members;
  if (n < 1 || n > size()) throw InvalidParameter("acb: member count out of range");
  Eigen::MatrixXd out = (predictors_[0].values(phi) - targets_[0].values(phi)).cwiseAbs();
  for (int i = 1; i < n; ++i) {
    out = out.cwiseMax((predictors_[i].values(phi) - targets_[i].values(phi)).cwiseAbs());
  }
  return out;
}

Eigen::VectorXd AcbModel::rewards(const core::EncodedBatch& batch) const {
  const Eigen::MatrixXd b = bonus(batch.phi);
  Eigen::VectorXd r(batch.size());
  for (int j = 0; j < batch.size(); ++j) r[j] = b(batch.actions[j], j);
  return r;
}

void AcbModel::train(const core::EncodedBatch& batch) {
  std::vector<double> y(batch.size());
  for (int i = 0; i < size(); ++i) {
    const Eigen::MatrixXd g = targets_[i].values(batch.phi);
    for (int j = 0; j < batch.size(); ++j) y[j] = g(batch.actions[j], j);
    core::regression_step(predictors_[i], opts_[i], batch.phi, batch.actions, y);
  }
}

IntrinsicAgent::IntrinsicAgent(core::AgentContext ctx, Kind kind)
    : ctx_(std::move(ctx)),
      kind_(kind),
      init_rng_(ctx_.rng(Stream::agent_init)),
      replay_rng_(ctx_.rng(Stream::replay)),
      policy_rng_(ctx_.rng(Stream::policy)),
      buffer_(ctx_.config.buffer_capacity) {
  ctx_.config.validate();
  q_ = core::TargetNetPair(ctx_.make_network(ctx_.num_actions, init_rng_), ctx_.config.optimizer_config(),
                           ctx_.config.tau);
  if (kind_ == Kind::rnd) {
    model_ = std::make_unique<RndModel>(ctx_, init_rng_);
  } else {
    model_ = std::make_unique<AcbModel>(ctx_, init_rng_);
  }
  head_ = IntrinsicValueHead(ctx_.make_network(ctx_.num_actions, init_rng_), ctx_.config.optimizer_config(),
                             ctx_.config.tau, ctx_.config.gamma);
}

Eigen::VectorXd IntrinsicAgent::action_values(const Observation& s) const {
  return q_.live().values(ctx_.features.encode(s)).col(0);
}

Eigen::VectorXd IntrinsicAgent::bonus(const Observation& s) const {
  return head_.values(ctx_.features.encode(s)).col(0);
}

int IntrinsicAgent::act(const Observation& s) {
  const approx::SparseRows phi = ctx_.features.encode(s);
  return core::select_action_optimistic(q_.live().values(phi).col(0), head_.values(phi).col(0), ctx_.config.c,
                                        policy_rng_);
}

void IntrinsicAgent::observe(const core::Transition& t) {
  buffer_.add(t);
  const auto sample = buffer_.sample(ctx_.config.batch_size, replay_rng_);
  const core::EncodedBatch batch = core::encode_batch(sample, ctx_.features);

  Eigen::MatrixXd score = q_.live().values(batch.phi_next);
  if (ctx_.config.target_policy == core::TargetPolicy::optimistic && ctx_.config.c != 0.0) {
    score += ctx_.config.c * head_.values(batch.phi_next);
  }
  const std::vector<int> next = core::argmax_columns(score, policy_rng_);
  core::ddqn_update(q_.live(), q_.frozen(), q_.optimizer(), batch, next);

  const Eigen::VectorXd r_int = model_->rewards(batch);
  head_.update(batch, {r_int.data(), static_cast<std::size_t>(r_int.size())}, policy_rng_);
  model_->train(batch);

  q_.tick();
  head_.tick();
}

}  // namespace vbe::explore
