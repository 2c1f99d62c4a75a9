#pragma once

#include <Eigen/Core>

namespace vbe::approx {

enum class OptimizerKind { adam, sgd };

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::adam;
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// Gradient-descent optimizer over a flat parameter vector. step() descends
/// the loss whose gradient it is given.
class Optimizer {
 public:
  Optimizer() = default;
  Optimizer(OptimizerConfig config, Eigen::Index size);

  const OptimizerConfig& config() const { return config_; }
  long steps() const { return t_; }

  /// An all-zero gradient is a no-op (moment state is left untouched too).
  void step(Eigen::VectorXd& params, const Eigen::VectorXd& grad);

 private:
  OptimizerConfig config_;
  Eigen::VectorXd m_;
  Eigen::VectorXd v_;
  long t_ = 0;
};

}  // namespace vbe::approx
