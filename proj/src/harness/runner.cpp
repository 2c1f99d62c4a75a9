#include "vbe/harness/runner.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "vbe/common/errors.hpp"
#include "vbe/explore/factory.hpp"
#include "vbe/harness/coverage.hpp"

namespace vbe::harness {

namespace {

void record_visit(CoverageTracker* cov, const Observation& obs) {
  if (cov) cov->visit(static_cast<int>(obs[0]), static_cast<int>(obs[1]));
}

}  // namespace

RunResult run_single(const ExperimentConfig& cfg, std::uint64_t seed, int run) {
  auto env = envs::make_environment(cfg.env);
  auto agent = explore::make_agent(cfg.agent, make_context(cfg, *env, seed, run));
  Rng env_rng = make_rng(seed, run, Stream::env);
  const double gamma = cfg.agent_config.gamma;

  RunResult res;
  res.action_counts.assign(env->num_actions(), 0);
  std::unique_ptr<CoverageTracker> cov;
  if (envs::is_deepsea(cfg.env.name)) cov = std::make_unique<CoverageTracker>(cfg.env.grid_size);

  auto transition = [&](const Observation& s, int a) {
    ++res.action_counts[a];
    envs::EnvStep st = env->step(a, env_rng);
    core::Transition t{s, a, st.reward, st.next_obs, gamma * st.discount};
    agent->observe(t);
    ++res.steps;
    return st;
  };

  if (env->continuing()) {
    if (cfg.steps <= 0) throw ConfigError("training.steps", "continuing tasks need a step budget");
    Observation s = env->reset(env_rng);
    double total = 0.0;
    while (res.steps < cfg.steps) {
      const int a = agent->act(s);
      envs::EnvStep st = transition(s, a);
      total += st.reward;
      s = std::move(st.next_obs);
      if (res.steps % cfg.log_interval == 0) res.log.append({run, seed, res.steps, 0, total, 0});
    }
  } else {
    const long cutoff = env->max_episode_steps();
    auto budget_left = [&] {
      return cfg.episodes > 0 ? res.episodes < cfg.episodes : res.steps < cfg.steps;
    };
    while (budget_left()) {
      agent->begin_episode();
      Observation s = env->reset(env_rng);
      record_visit(cov.get(), s);
      double ret = 0.0;
      double scale = 1.0;
      long len = 0;
      bool cut_by_budget = false;
      for (;;) {
        const int a = agent->act(s);
        envs::EnvStep st = transition(s, a);
        ret += (cfg.metric == Metric::return_discounted ? scale : 1.0) * st.reward;
        scale *= gamma;
        ++len;
        if (!st.terminal) record_visit(cov.get(), st.next_obs);
        if (st.terminal || (cutoff > 0 && len >= cutoff)) break;
        s = std::move(st.next_obs);
        if (cfg.episodes == 0 && res.steps >= cfg.steps) {
          cut_by_budget = true;
          break;
        }
      }
      if (cut_by_budget) break;
      ++res.episodes;
      const long coverage = cov ? cov->count() : 0;
      const double metric = cfg.metric == Metric::coverage ? static_cast<double>(coverage) : ret;
      res.log.append({run, seed, res.steps, res.episodes, metric, coverage});
      if (cfg.stop_at_full_coverage && cov && cov->full()) break;
    }
  }
  res.coverage = cov ? cov->count() : 0;
  return res;
}

std::vector<RunResult> run_many(const ExperimentConfig& cfg, int threads) {
  std::vector<RunResult> results(cfg.runs);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int r = next++; r < cfg.runs; r = next++) results[r] = run_single(cfg, cfg.seed, r);
  };
  const int n = std::clamp(threads, 1, cfg.runs);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  return results;
}

RunLog merge_logs(const std::vector<RunResult>& results) {
  RunLog out;
  for (const auto& r : results) out.extend(r.log);
  return out;
}

namespace {

template <class F>
double mean_over_runs(const RunLog& log, F&& per_run) {
  std::vector<double> values;
  const auto& recs = log.records();
  std::size_t i = 0;
  while (i < recs.size()) {
    std::size_t j = i;
    while (j < recs.size() && recs[j].run == recs[i].run) ++j;
    values.push_back(per_run(recs.begin() + i, recs.begin() + j));
    i = j;
  }
  if (values.empty()) return 0.0;
  return std::accumulate(values.begin(), values.end(), 0.0) / values.size();
}

}  // namespace

double final_window_mean(const RunLog& log, double fraction) {
  if (fraction <= 0.0 || fraction > 1.0) throw InvalidParameter("window fraction must lie in (0, 1]");
  return mean_over_runs(log, [fraction](auto first, auto last) {
    const auto n = static_cast<std::size_t>(last - first);
    const std::size_t w = std::max<std::size_t>(1, static_cast<std::size_t>(fraction * n));
    double s = 0.0;
    for (auto it = last - w; it != last; ++it) s += it->metric;
    return s / w;
  });
}

double area_under_curve(const RunLog& log) {
  return mean_over_runs(log, [](auto first, auto last) {
    double s = 0.0;
    for (auto it = first; it != last; ++it) s += it->metric;
    return s / static_cast<double>(last - first);
  });
}

std::vector<SweepCell> run_sweep(const ExperimentConfig& cfg, const std::vector<int>& ks,
                                 const std::vector<double>& cs, int threads) {
  std::vector<SweepCell> cells;
  for (int k : ks) {
    for (double c : cs) {
      ExperimentConfig cell = cfg;
      cell.agent_config.k = k;
      cell.agent_config.c = c;
      cell.agent_config.validate();
      SweepCell out{k, c, merge_logs(run_many(cell, threads)), 0.0, 0.0};
      out.final_mean = final_window_mean(out.log);
      out.auc = area_under_curve(out.log);
      cells.push_back(std::move(out));
    }
  }
  return cells;
}

const SweepCell& best_cell(const std::vector<SweepCell>& cells, Selection by) {
  if (cells.empty()) throw InvalidParameter("best_cell: no cells");
  auto score = [by](const SweepCell& c) { return by == Selection::final_window ? c.final_mean : c.auc; };
  const SweepCell* best = &cells.front();
  for (const auto& c : cells) {
    if (score(c) > score(*best)) best = &c;
  }
  return *best;
}

std::vector<CoverageCurve> pure_exploration_run(const std::vector<int>& grid_sizes, const ExperimentConfig& cfg,
                                                int threads) {
  std::vector<CoverageCurve> out;
  for (int n : grid_sizes) {
    ExperimentConfig c = cfg;
    c.env.name = "deepsea_pure";
    c.env.grid_size = n;
    c.metric = Metric::coverage;
    if (c.episodes == 0) c.episodes = 10000;
    out.push_back({n, envs::deepsea_state_count(n), merge_logs(run_many(c, threads))});
  }
  return out;
}

}  // namespace vbe::harness
