#include "vbe/approx/mlp.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include "vbe/common/errors.hpp"

namespace vbe::approx {

Mlp::Mlp(Architecture arch) : arch_(std::move(arch)) {
  if (arch_.input_dim < 1 || arch_.outputs < 1) {
    throw InvalidParameter("mlp: input and output sizes must be positive");
  }
  Eigen::Index offset = 0;
  int in = arch_.input_dim;
  auto add_layer = [&](int out) {
    if (out < 1) throw InvalidParameter("mlp: layer sizes must be positive");
    Shape s{in, out, offset, -1};
    offset += static_cast<Eigen::Index>(in) * out;
    if (arch_.bias) {
      s.b_offset = offset;
      offset += out;
    }
    shapes_.push_back(s);
    in = out;
  };
  for (int h : arch_.hidden) add_layer(h);
  add_layer(arch_.outputs);
  params_ = Eigen::VectorXd::Zero(offset);
}

void Mlp::set_params(const Eigen::VectorXd& p) {
  if (p.size() != params_.size()) throw InvalidParameter("mlp: parameter size mismatch");
  params_ = p;
  has_cache_ = false;
}

Eigen::VectorXd& Mlp::mutable_params() {
  has_cache_ = false;
  return params_;
}

Mlp::MatrixMap Mlp::weight(int layer) {
  const auto& s = shapes_.at(layer);
  return {params_.data() + s.w_offset, s.out, s.in};
}

Mlp::ConstMatrixMap Mlp::weight(int layer) const {
  const auto& s = shapes_.at(layer);
  return {params_.data() + s.w_offset, s.out, s.in};
}

Mlp::VectorMap Mlp::bias(int layer) {
  const auto& s = shapes_.at(layer);
  if (s.b_offset < 0) return {params_.data(), 0};
  return {params_.data() + s.b_offset, s.out};
}

Mlp::ConstVectorMap Mlp::bias(int layer) const {
  const auto& s = shapes_.at(layer);
  if (s.b_offset < 0) return {params_.data(), 0};
  return {params_.data() + s.b_offset, s.out};
}

void Mlp::initialize(const InitScheme& scheme, Rng& rng) {
  for (int l = 0; l < num_layers(); ++l) {
    const double fan_in = shapes_[l].in;
    auto w = weight(l);
    auto b = bias(l);
    if (scheme.kind == InitKind::uniform_fan_in) {
      const double bound = 1.0 / std::sqrt(fan_in);
      for (Eigen::Index i = 0; i < w.size(); ++i) w.data()[i] = uniform(rng, -bound, bound);
      for (Eigen::Index i = 0; i < b.size(); ++i) b[i] = uniform(rng, -bound, bound);
    } else {
      const double sd = std::sqrt(scheme.variance / fan_in);
      for (Eigen::Index i = 0; i < w.size(); ++i) w.data()[i] = normal(rng, 0.0, sd);
      b.setZero();
    }
  }
  has_cache_ = false;
}

Eigen::MatrixXd Mlp::forward_impl(const SparseRows& x, std::vector<Eigen::MatrixXd>* hidden) const {
  if (x.dim() != arch_.input_dim) {
    throw InvalidParameter("mlp: input has dimension " + std::to_string(x.dim()) + ", expected " +
                           std::to_string(arch_.input_dim));
  }
  const int batch = x.rows();
  const int layers = num_layers();

  // First layer reads the sparse rows directly.
  auto w0 = weight(0);
  Eigen::MatrixXd z(shapes_[0].out, batch);
  if (arch_.bias) {
    z.colwise() = bias(0);
  } else {
    z.setZero();
  }
  for (int r = 0; r < batch; ++r) {
    auto idx = x.row_index(r);
    auto val = x.row_value(r);
    for (std::size_t i = 0; i < idx.size(); ++i) z.col(r).noalias() += val[i] * w0.col(idx[i]);
  }

  for (int l = 1; l < layers; ++l) {
    z = z.cwiseMax(0.0);
    Eigen::MatrixXd next(shapes_[l].out, batch);
    next.noalias() = weight(l) * z;
    if (arch_.bias) next.colwise() += bias(l);
    if (hidden) hidden->push_back(std::move(z));
    z = std::move(next);
  }
  return z;
}

Eigen::MatrixXd Mlp::values(const SparseRows& x) const { return forward_impl(x, nullptr); }

Eigen::MatrixXd Mlp::forward_cached(const SparseRows& x) {
  cached_hidden_.clear();
  Eigen::MatrixXd out = forward_impl(x, &cached_hidden_);
  cached_input_ = x;
  has_cache_ = true;
  return out;
}

Eigen::VectorXd Mlp::backward(const Eigen::MatrixXd& output_grad) {
  if (!has_cache_) throw ContractViolation("mlp: backward called without a cached forward pass");
  const int batch = cached_input_.rows();
  if (output_grad.rows() != arch_.outputs || output_grad.cols() != batch) {
    throw InvalidParameter("mlp: output gradient shape does not match the cached batch");
  }
  has_cache_ = false;

  Eigen::VectorXd grad = Eigen::VectorXd::Zero(params_.size());
  Eigen::MatrixXd g = output_grad;
  for (int l = num_layers() - 1; l >= 1; --l) {
    const auto& s = shapes_[l];
    const Eigen::MatrixXd& h = cached_hidden_[l - 1];
    Eigen::Map<Eigen::MatrixXd> gw(grad.data() + s.w_offset, s.out, s.in);
    gw.noalias() = g * h.transpose();
    if (s.b_offset >= 0) grad.segment(s.b_offset, s.out) = g.rowwise().sum();
    Eigen::MatrixXd back = weight(l).transpose() * g;
    g = back.cwiseProduct((h.array() > 0.0).cast<double>().matrix());
  }

  const auto& s0 = shapes_[0];
  Eigen::Map<Eigen::MatrixXd> gw0(grad.data() + s0.w_offset, s0.out, s0.in);
  for (int r = 0; r < batch; ++r) {
    auto idx = cached_input_.row_index(r);
    auto val = cached_input_.row_value(r);
    for (std::size_t i = 0; i < idx.size(); ++i) gw0.col(idx[i]).noalias() += val[i] * g.col(r);
  }
  if (s0.b_offset >= 0) grad.segment(s0.b_offset, s0.out) = g.rowwise().sum();
  return grad;
}

void Mlp::write_binary(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  for (int l = 0; l < num_layers(); ++l) {
    auto w = weight(l);
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
      for (Eigen::Index j = 0; j < w.cols(); ++j) {
        const double v = w(i, j);
        out.write(reinterpret_cast<const char*>(&v), sizeof v);
      }
    }
    auto b = bias(l);
    for (Eigen::Index i = 0; i < b.size(); ++i) {
      const double v = b[i];
      out.write(reinterpret_cast<const char*>(&v), sizeof v);
    }
  }
  if (!out) throw IoError("failed writing " + path.string());
}

void Mlp::write_csv(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.precision(17);
  out << "layer,param,row,col,value\n";
  for (int l = 0; l < num_layers(); ++l) {
    auto w = weight(l);
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
      for (Eigen::Index j = 0; j < w.cols(); ++j) out << l << ",weight," << i << ',' << j << ',' << w(i, j) << '\n';
    }
    auto b = bias(l);
    for (Eigen::Index i = 0; i < b.size(); ++i) out << l << ",bias," << i << ",0," << b[i] << '\n';
  }
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace vbe::approx
