#include "vbe/approx/optimizer.hpp"

#include <cmath>

#include "vbe/common/errors.hpp"

namespace vbe::approx {

Optimizer::Optimizer(OptimizerConfig config, Eigen::Index size)
    : config_(config), m_(Eigen::VectorXd::Zero(size)), v_(Eigen::VectorXd::Zero(size)) {
  if (config_.learning_rate < 0.0) throw InvalidParameter("optimizer: negative learning rate");
}

void Optimizer::step(Eigen::VectorXd& params, const Eigen::VectorXd& grad) {
  if (params.size() != m_.size() || grad.size() != m_.size()) {
    throw InvalidParameter("optimizer: parameter/gradient shape mismatch");
  }
  if ((grad.array() == 0.0).all()) return;

  ++t_;
  const double lr = config_.learning_rate;
  if (config_.kind == OptimizerKind::sgd) {
    params.noalias() -= lr * grad;
    return;
  }
  const double b1 = config_.beta1;
  const double b2 = config_.beta2;
  m_ = b1 * m_ + (1.0 - b1) * grad;
  v_ = b2 * v_ + (1.0 - b2) * grad.cwiseAbs2();
  const double c1 = 1.0 - std::pow(b1, static_cast<double>(t_));
  const double c2 = 1.0 - std::pow(b2, static_cast<double>(t_));
  params.array() -= lr * (m_.array() / c1) / ((v_.array() / c2).sqrt() + config_.epsilon);
}

}  // namespace vbe::approx
