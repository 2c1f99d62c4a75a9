#include "vbe/harness/coverage.hpp"

#include "vbe/common/errors.hpp"
#include "vbe/envs/deepsea.hpp"

namespace vbe::harness {

CoverageTracker::CoverageTracker(int grid_size) : n_(grid_size) {
  if (grid_size < 1) throw InvalidParameter("coverage: grid size must be >= 1");
  seen_.assign(ceiling(), 0);
}

bool CoverageTracker::visit(int row, int col) {
  if (row >= n_) return false;
  const int idx = envs::deepsea_state_index(row, col, n_);
  if (seen_[idx]) return false;
  seen_[idx] = 1;
  ++count_;
  return true;
}

}  // namespace vbe::harness
