#pragma once

#include <filesystem>
#include <vector>

#include <Eigen/Core>

#include "vbe/approx/features.hpp"
#include "vbe/common/random.hpp"

namespace vbe::approx {

/// Layer sizes of a fully-connected network: input -> hidden... -> outputs.
/// Hidden layers use a rectifier, the output layer is linear. With no hidden
/// layers the network is a linear function of its features (tabular when the
/// features are one-hot).
struct Architecture {
  int input_dim = 0;
  std::vector<int> hidden;
  int outputs = 1;
  bool bias = true;

  bool operator==(const Architecture&) const = default;
};

enum class InitKind {
  uniform_fan_in,   // U(-1/sqrt(fan_in), 1/sqrt(fan_in)) for weights and biases
  gaussian_over_n,  // N(0, variance / fan_in) weights, zero biases
};

struct InitScheme {
  InitKind kind = InitKind::uniform_fan_in;
  double variance = 1.0;
};

/// Feed-forward network with a hand-written backward pass. All parameters
/// live in one flat vector (layer-major; per layer the column-major weight
/// matrix followed by the bias) so optimizers and target copies work on a
/// single buffer.
class Mlp {
 public:
  using MatrixMap = Eigen::Map<Eigen::MatrixXd>;
  using ConstMatrixMap = Eigen::Map<const Eigen::MatrixXd>;
  using VectorMap = Eigen::Map<Eigen::VectorXd>;
  using ConstVectorMap = Eigen::Map<const Eigen::VectorXd>;

  Mlp() = default;
  /// Parameters start at zero; call initialize() for a random draw.
  explicit Mlp(Architecture arch);

  const Architecture& architecture() const { return arch_; }
  int num_layers() const { return static_cast<int>(shapes_.size()); }
  int outputs() const { return arch_.outputs; }
  Eigen::Index num_params() const { return params_.size(); }

  const Eigen::VectorXd& params() const { return params_; }
  void set_params(const Eigen::VectorXd& p);
  /// Writable access to the parameter buffer. Invalidates any cached forward.
  Eigen::VectorXd& mutable_params();

  MatrixMap weight(int layer);
  ConstMatrixMap weight(int layer) const;
  /// Empty map when the architecture has no biases.
  VectorMap bias(int layer);
  ConstVectorMap bias(int layer) const;

  void initialize(const InitScheme& scheme, Rng& rng);

  /// outputs x rows matrix of values. Pure.
  Eigen::MatrixXd values(const SparseRows& x) const;

  /// Same as values() but keeps the activations for one backward() call.
  Eigen::MatrixXd forward_cached(const SparseRows& x);

  /// Gradient of sum(output_grad .* forward(x)) with respect to params(), for
  /// the input of the preceding forward_cached(). Consumes the cache.
  Eigen::VectorXd backward(const Eigen::MatrixXd& output_grad);

  bool has_cache() const { return has_cache_; }

  /// Debug dumps: layer-major, weights row-major then biases, 64-bit floats.
  void write_binary(const std::filesystem::path& path) const;
  void write_csv(const std::filesystem::path& path) const;

 private:
  struct Shape {
    int in;
    int out;
    Eigen::Index w_offset;
    Eigen::Index b_offset;  // -1 without bias
  };

  Eigen::MatrixXd forward_impl(const SparseRows& x, std::vector<Eigen::MatrixXd>* hidden) const;

  Architecture arch_;
  std::vector<Shape> shapes_;
  Eigen::VectorXd params_;

  bool has_cache_ = false;
  SparseRows cached_input_;
  std::vector<Eigen::MatrixXd> cached_hidden_;
};

}  // namespace vbe::approx
