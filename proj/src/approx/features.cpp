#include "vbe/approx/features.hpp"

#include <cmath>
#include <string>

#include "vbe/common/errors.hpp"

namespace vbe::approx {

std::vector<double> SparseRows::dense_row(int r) const {
  std::vector<double> x(dim_, 0.0);
  auto idx = row_index(r);
  auto val = row_value(r);
  for (std::size_t i = 0; i < idx.size(); ++i) x[idx[i]] += val[i];
  return x;
}

std::vector<double> one_hot(int index, int dim) {
  if (dim < 1 || index < 0 || index >= dim) {
    throw InvalidParameter("one_hot: index " + std::to_string(index) + " outside [0, " +
                           std::to_string(dim) + ")");
  }
  std::vector<double> x(dim, 0.0);
  x[index] = 1.0;
  return x;
}

FeatureMap FeatureMap::one_hot(int dim, int input_dim, Indexer indexer) {
  if (dim < 1) throw InvalidParameter("one_hot map: dim must be positive");
  FeatureMap m;
  m.kind_ = FeatureKind::one_hot;
  m.input_dim_ = input_dim;
  m.output_dim_ = dim;
  m.indexer_ = std::move(indexer);
  return m;
}

FeatureMap FeatureMap::tile_code(Box box, int tiles, int tilings, int output_dim) {
  if (tiles < 2 || tilings < 1 || output_dim < 1) {
    throw InvalidParameter("tile_code: need tiles >= 2, tilings >= 1, output_dim >= 1");
  }
  FeatureMap m;
  m.kind_ = FeatureKind::tile_code;
  m.input_dim_ = static_cast<int>(box.dim());
  m.output_dim_ = output_dim;
  m.tiles_ = tiles;
  m.tilings_ = tilings;
  m.box_ = std::move(box);
  return m;
}

FeatureMap FeatureMap::identity(Box box, bool normalize) {
  FeatureMap m;
  m.kind_ = FeatureKind::identity;
  m.input_dim_ = static_cast<int>(box.dim());
  m.output_dim_ = m.input_dim_;
  m.normalize_ = normalize;
  m.box_ = std::move(box);
  return m;
}

void FeatureMap::encode(std::span<const double> obs, SparseRows& out) const {
  if (static_cast<int>(obs.size()) != input_dim_) {
    throw InvalidParameter("feature map: observation has " + std::to_string(obs.size()) +
                           " dims, expected " + std::to_string(input_dim_));
  }
  switch (kind_) {
    case FeatureKind::one_hot: {
      const int i = indexer_(obs);
      if (i >= output_dim_) throw InvalidParameter("one_hot map: index out of range");
      if (i >= 0) out.push(i, 1.0);
      out.close_row();
      return;
    }
    case FeatureKind::tile_code:
      encode_tiles(obs, out);
      return;
    case FeatureKind::identity:
      for (int d = 0; d < input_dim_; ++d) {
        double x = obs[d];
        if (normalize_) x = (box_.clip(d, x) - box_.low[d]) / (box_.high[d] - box_.low[d]);
        out.push(d, x);
      }
      out.close_row();
      return;
  }
}

SparseRows FeatureMap::encode(std::span<const double> obs) const {
  SparseRows rows(output_dim_);
  encode(obs, rows);
  return rows;
}

void FeatureMap::encode_tiles(std::span<const double> obs, SparseRows& out) const {
  long per_tiling = 1;
  for (int d = 0; d < input_dim_; ++d) per_tiling *= tiles_;

  for (int t = 0; t < tilings_; ++t) {
    const double offset = static_cast<double>(t) / tilings_;
    long cell = 0;
    long stride = 1;
    for (int d = 0; d < input_dim_; ++d) {
      const double width = (box_.high[d] - box_.low[d]) / (tiles_ - 1);
      const double u = (box_.clip(d, obs[d]) - box_.low[d]) / width + offset;
      const long c = std::clamp(static_cast<long>(std::floor(u)), 0L, static_cast<long>(tiles_ - 1));
      cell += c * stride;
      stride *= tiles_;
    }
    const long index = (t * per_tiling + cell) % output_dim_;
    out.push(static_cast<int>(index), 1.0);
  }
  out.close_row();
}

}  // namespace vbe::approx
