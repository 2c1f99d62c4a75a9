#pragma once

#include <functional>
#include <span>
#include <vector>

#include "vbe/common/types.hpp"

namespace vbe::approx {

/// A batch of sparse feature vectors in compressed-row form. Every network in
/// the project consumes inputs through this type, so one-hot, tile-coded and
/// dense inputs share one code path.
class SparseRows {
 public:
  explicit SparseRows(int dim = 0) : dim_(dim) {}

  int dim() const { return dim_; }
  int rows() const { return static_cast<int>(offsets_.size()) - 1; }
  std::size_t nonzeros() const { return index_.size(); }

  void clear() {
    offsets_.assign(1, 0);
    index_.clear();
    value_.clear();
  }
  void reserve(int rows, std::size_t nnz) {
    offsets_.reserve(rows + 1);
    index_.reserve(nnz);
    value_.reserve(nnz);
  }

  /// Entries are appended to the open row; close_row() seals it.
  void push(int index, double value) {
    index_.push_back(index);
    value_.push_back(value);
  }
  void close_row() { offsets_.push_back(static_cast<int>(index_.size())); }

  void append_dense(std::span<const double> x) {
    for (std::size_t i = 0; i < x.size(); ++i) push(static_cast<int>(i), x[i]);
    close_row();
  }

  std::span<const int> row_index(int r) const {
    return {index_.data() + offsets_[r], static_cast<std::size_t>(offsets_[r + 1] - offsets_[r])};
  }
  std::span<const double> row_value(int r) const {
    return {value_.data() + offsets_[r], static_cast<std::size_t>(offsets_[r + 1] - offsets_[r])};
  }

  std::vector<double> dense_row(int r) const;

 private:
  int dim_;
  std::vector<int> offsets_{0};
  std::vector<int> index_;
  std::vector<double> value_;
};

/// Dense one-hot vector; throws InvalidParameter when index is out of range.
std::vector<double> one_hot(int index, int dim);

enum class FeatureKind { one_hot, tile_code, identity };

/// Immutable observation -> feature encoder.
class FeatureMap {
 public:
  /// Maps an observation to a discrete index, or -1 for an absorbing state
  /// that has no feature (its value is never bootstrapped from).
  using Indexer = std::function<int(std::span<const double>)>;

  static FeatureMap one_hot(int dim, int input_dim, Indexer indexer);

  /// Uniform grid tile coding over `box`. Each tiling has `tiles` cells per
  /// dimension of width (high - low) / (tiles - 1); tiling i is shifted by
  /// i / tilings of a cell width, so every tiling covers the whole box.
  /// Indices beyond output_dim fold back by modulo.
  static FeatureMap tile_code(Box box, int tiles, int tilings, int output_dim);

  /// Pass-through, optionally rescaling each coordinate of `box` onto [0, 1].
  static FeatureMap identity(Box box, bool normalize = true);

  FeatureKind kind() const { return kind_; }
  int input_dim() const { return input_dim_; }
  int output_dim() const { return output_dim_; }
  int tiles() const { return tiles_; }
  int tilings() const { return tilings_; }

  /// Appends one row to `out`.
  void encode(std::span<const double> obs, SparseRows& out) const;
  SparseRows encode(std::span<const double> obs) const;

 private:
  FeatureMap() = default;

  void encode_tiles(std::span<const double> obs, SparseRows& out) const;

  FeatureKind kind_ = FeatureKind::identity;
  int input_dim_ = 0;
  int output_dim_ = 0;
  int tiles_ = 0;
  int tilings_ = 0;
  bool normalize_ = false;
  Box box_;
  Indexer indexer_;
};

}  // namespace vbe::approx
