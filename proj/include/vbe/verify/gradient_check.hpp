#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "vbe/approx/mlp.hpp"

namespace vbe::verify {

/// ||g - g_fd|| / (||g|| + ||g_fd||) for the scalar sum(output_grad .* net(x)),
/// g from backward() and g_fd from central differences of step h.
double gradient_rel_error(approx::Mlp& net, const approx::SparseRows& x, const Eigen::MatrixXd& output_grad,
                          double h = 1e-5);

struct GradientCheckResult {
  int draws = 0;
  double max_rel_error = 0.0;
};

/// Random two-hidden-layer rectifier nets with random dense inputs.
GradientCheckResult gradient_check(int draws, std::uint64_t seed, double h = 1e-5);

}  // namespace vbe::verify
