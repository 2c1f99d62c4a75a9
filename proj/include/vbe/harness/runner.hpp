#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vbe/harness/config.hpp"
#include "vbe/harness/run_log.hpp"

namespace vbe::harness {

struct RunResult {
  RunLog log;
  std::vector<long> action_counts;
  long steps = 0;
  long episodes = 0;
  int coverage = 0;  // Deepsea only
};

/// One run of index `run` under master seed `seed`. Deterministic in
/// (cfg, seed, run); other runs never influence it.
RunResult run_single(const ExperimentConfig& cfg, std::uint64_t seed, int run = 0);

/// cfg.runs runs under cfg.seed, merged in run order. Runs are spread over
/// `threads` workers; results do not depend on the thread count.
std::vector<RunResult> run_many(const ExperimentConfig& cfg, int threads = 1);
RunLog merge_logs(const std::vector<RunResult>& results);

/// Mean over runs of each run's mean metric in its last `fraction` of records.
double final_window_mean(const RunLog& log, double fraction = 0.1);
/// Mean over runs of each run's mean metric (area under the curve per record).
double area_under_curve(const RunLog& log);

struct SweepCell {
  int k = 1;
  double c = 1.0;
  RunLog log;
  double final_mean = 0.0;
  double auc = 0.0;
};

inline const std::vector<int> kDefaultSweepK{1, 2, 8, 20};
inline const std::vector<double> kDefaultSweepC{1.0, 3.0, 10.0};

/// Cartesian product k x c, each cell a run_many of cfg with that (k, c).
std::vector<SweepCell> run_sweep(const ExperimentConfig& cfg, const std::vector<int>& ks = kDefaultSweepK,
                                 const std::vector<double>& cs = kDefaultSweepC, int threads = 1);

enum class Selection { final_window, auc };
/// Highest-scoring cell; ties keep the earlier cell.
const SweepCell& best_cell(const std::vector<SweepCell>& cells, Selection by = Selection::final_window);

struct CoverageCurve {
  int grid_size = 0;
  int ceiling = 0;
  RunLog log;  // metric = unique cells after each episode
};

/// Reward-free Deepsea for each grid size, with everything else from cfg.
std::vector<CoverageCurve> pure_exploration_run(const std::vector<int>& grid_sizes, const ExperimentConfig& cfg,
                                                int threads = 1);

}  // namespace vbe::harness
