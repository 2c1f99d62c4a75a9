#pragma once

#include <vector>

namespace vbe::harness {

/// Unique Deepsea (row, col) cells visited so far. Absorbing-row positions
/// are ignored.
class CoverageTracker {
 public:
  explicit CoverageTracker(int grid_size);

  int grid_size() const { return n_; }
  int ceiling() const { return n_ * (n_ + 1) / 2; }
  int count() const { return count_; }
  bool full() const { return count_ == ceiling(); }

  /// Returns true when the cell is new.
  bool visit(int row, int col);

  /// Coverage recorded at the end of each episode.
  void end_episode() { history_.push_back(count_); }
  const std::vector<int>& history() const { return history_; }

 private:
  int n_;
  int count_ = 0;
  std::vector<char> seen_;
  std::vector<int> history_;
};

}  // namespace vbe::harness
