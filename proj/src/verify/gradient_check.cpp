#include "vbe/verify/gradient_check.hpp"

#include <algorithm>

#include "vbe/common/random.hpp"

namespace vbe::verify {

double gradient_rel_error(approx::Mlp& net, const approx::SparseRows& x, const Eigen::MatrixXd& output_grad,
                          double h) {
  net.forward_cached(x);
  const Eigen::VectorXd g = net.backward(output_grad);

  auto loss = [&] { return (net.values(x).array() * output_grad.array()).sum(); };
  Eigen::VectorXd fd(g.size());
  for (Eigen::Index j = 0; j < g.size(); ++j) {
    const double keep = net.params()[j];
    net.mutable_params()[j] = keep + h;
    const double up = loss();
    net.mutable_params()[j] = keep - h;
    const double down = loss();
    net.mutable_params()[j] = keep;
    fd[j] = (up - down) / (2.0 * h);
  }
  const double denom = g.norm() + fd.norm();
  return denom == 0.0 ? 0.0 : (g - fd).norm() / denom;
}

GradientCheckResult gradient_check(int draws, std::uint64_t seed, double h) {
  GradientCheckResult out;
  for (int d = 0; d < draws; ++d) {
    Rng rng = make_rng(seed, d, Stream::verify);
    approx::Architecture arch{uniform_int(rng, 1, 6), {uniform_int(rng, 2, 8), uniform_int(rng, 2, 8)},
                              uniform_int(rng, 1, 4), true};
    approx::Mlp net(arch);
    net.initialize({approx::InitKind::gaussian_over_n, 2.0}, rng);
    for (int l = 0; l < net.num_layers(); ++l) {
      auto b = net.bias(l);
      for (Eigen::Index i = 0; i < b.size(); ++i) b[i] = normal(rng, 0.0, 0.5);
    }
    const int rows = uniform_int(rng, 1, 4);
    approx::SparseRows x(arch.input_dim);
    std::vector<double> v(arch.input_dim);
    for (int r = 0; r < rows; ++r) {
      for (double& e : v) e = normal(rng);
      x.append_dense(v);
    }
    Eigen::MatrixXd grad(arch.outputs, rows);
    for (Eigen::Index i = 0; i < grad.size(); ++i) grad.data()[i] = normal(rng);
    out.max_rel_error = std::max(out.max_rel_error, gradient_rel_error(net, x, grad, h));
    ++out.draws;
  }
  return out;
}

}  // namespace vbe::verify
