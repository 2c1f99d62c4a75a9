#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "vbe/common/random.hpp"
#include "vbe/harness/config.hpp"
#include "vbe/harness/run_log.hpp"
#include "vbe/harness/runner.hpp"
#include "vbe/verify/bonus_decay.hpp"
#include "vbe/verify/gradient_check.hpp"
#include "vbe/verify/optimism.hpp"
#include "vbe/verify/propositions.hpp"
#include "vbe/verify/tabular_mdp.hpp"

using namespace vbe;
using namespace vbe::harness;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kIdentityTol = 1e-9;
constexpr double kFixedPointSeconds = 10.0;
constexpr double kOptimismSeconds = 120.0;
constexpr long kOptimismTrials = 100000;
constexpr double kBonusDecayMax = 1e-2;
constexpr double kGradRelErr = 1e-4;
constexpr int kGradDraws = 100;
constexpr double kControlSolved = 0.8;
constexpr double kControlFailed = 0.1;
constexpr int kControlSeedsNeeded = 4;
constexpr double kDownstreamReward = 0.005;
constexpr double kRiverFactor = 5.0;
constexpr int kRiverRunsNeeded = 25;

int failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int id, bool ok, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// per-run final-window mean of the episode metric
std::vector<double> final_per_run(const std::vector<RunResult>& results) {
  std::vector<double> out;
  for (const auto& r : results) out.push_back(final_window_mean(r.log));
  return out;
}

void fixed_point() {
  const auto t0 = Clock::now();
  Rng rng(101);
  double worst = 0.0;
  for (int d = 0; d < 100; ++d) {
    const bool det = d % 2 == 1;
    auto m = verify::random_mdp({6, 3, 0.9, det ? 0.0 : 0.1, det}, rng);
    auto ens = verify::tabular_ensemble(6, 3, 2, rng);
    worst = std::max(worst, verify::check_prop1(m, ens));
  }
  const double secs = seconds_since(t0);
  report(1, worst < kIdentityTol && secs < kFixedPointSeconds,
         fmt("max gap %.3e (tol %.0e) over 100 draws, %.2f s (limit %.0f s)", worst, kIdentityTol, secs,
             kFixedPointSeconds));
}

void telescoping() {
  Rng rng(202);
  double worst = 0.0;
  for (int d = 0; d < 100; ++d) {
    auto m = verify::random_mdp({6, 2, 0.95, 0.05, false}, rng);
    auto ens = verify::tabular_ensemble(6, 2, 2, rng);
    for (int t = 0; t < 10; ++t) worst = std::max(worst, verify::telescoping_gap(m, ens, t % 2, 60, rng));
  }
  report(2, worst < kIdentityTol, fmt("max gap %.3e (tol %.0e) over 1000 trajectories", worst, kIdentityTol));
}

void decomposition() {
  Rng rng(303);
  double worst = 0.0;
  for (int d = 0; d < 100; ++d) {
    auto m = verify::random_mdp({5, 2, 0.9, 0.1, false}, rng);
    auto ens = verify::tabular_ensemble(5, 2, 3, rng);
    worst = std::max(worst, verify::check_prop2(m, ens));
  }
  report(3, worst < kIdentityTol,
         fmt("max gap %.3e (tol %.0e) over 100 stochastic draws", worst, kIdentityTol));
}

void optimism() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string worst;
  double margin = 1.0;
  std::uint64_t seed = 404;
  for (int n : {64, 256}) {
    for (int k : {8, 20}) {
      for (double delta : {0.05, 0.1}) {
        verify::OptimismCheckConfig cfg;
        cfg.n = n, cfg.k = k, cfg.delta = delta, cfg.trials = kOptimismTrials, cfg.seed = seed++;
        const double c = verify::min_bonus_scale(n, k, delta, cfg.q_max, verify::ThresholdForm::proof);
        const double rate = verify::optimism_mc(cfg, c);
        const double need = 1.0 - delta - 3.0 * cfg.sigma();
        if (rate < need) ok = false;
        if (rate - need < margin) {
          margin = rate - need;
          worst = fmt("n=%d k=%d delta=%.2f rate %.4f >= %.4f", n, k, delta, rate, need);
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  ok = ok && secs < kOptimismSeconds;
  report(4, ok, fmt("8 settings, tightest %s, %.1f s (limit %.0f s)", worst.c_str(), secs, kOptimismSeconds));
}

void coverage() {
  auto cfg = default_config("deepsea_pure");
  apply_regime(cfg, FeatureRegime::tabular);
  cfg.agent = "vbe";
  cfg.agent_config.k = 1;
  cfg.agent_config.c = 1.0;
  cfg.agent_config.tau = 64;
  cfg.episodes = 10000;
  cfg.runs = 5;
  cfg.seed = 505;
  cfg.stop_at_full_coverage = true;

  bool ok = true;
  std::string detail;
  std::vector<int> vbe20;
  for (int n : {10, 20}) {
    cfg.env.grid_size = n;
    const int ceiling = n * (n + 1) / 2;
    detail += fmt("vbe N=%d:", n);
    for (const auto& r : run_many(cfg)) {
      detail += fmt(" %d", r.coverage);
      if (r.coverage != ceiling) ok = false;
      if (n == 20) vbe20.push_back(r.coverage);
    }
    detail += fmt("/%d; ", ceiling);
  }

  auto eps = cfg;
  eps.agent = "ddqn_eps";
  eps.agent_config.epsilon = 0.1;
  eps.agent_config.tau = 4;
  eps.env.grid_size = 20;
  eps.stop_at_full_coverage = false;
  detail += "ddqn_eps N=20:";
  auto base = run_many(eps);
  for (std::size_t i = 0; i < base.size(); ++i) {
    detail += fmt(" %d", base[i].coverage);
    if (base[i].coverage >= vbe20[i]) ok = false;
  }
  report(5, ok, detail + "/210");
}

void control() {
  auto cfg = default_config("deepsea");
  apply_regime(cfg, FeatureRegime::mlp);
  cfg.env.grid_size = 10;
  cfg.episodes = 10000;
  cfg.runs = 5;
  cfg.seed = 606;

  auto vbe = cfg;
  vbe.agent = "vbe";
  vbe.agent_config.k = 20;
  vbe.agent_config.c = 1.0;
  vbe.agent_config.tau = 64;
  auto dqnp = cfg;
  dqnp.agent = "dqn_p";
  dqnp.agent_config.k = 1;
  dqnp.agent_config.c = 10.0;
  dqnp.agent_config.tau = 4;

  int solved = 0, failed = 0;
  std::string detail = "vbe final:";
  for (double v : final_per_run(run_many(vbe))) {
    detail += fmt(" %.3f", v);
    solved += v > kControlSolved;
  }
  detail += "; dqn_p final:";
  for (double v : final_per_run(run_many(dqnp))) {
    detail += fmt(" %.3f", v);
    failed += v <= kControlFailed;
  }
  detail += fmt("; vbe > %.1f in %d/5, dqn_p <= %.1f in %d/5 (need %d each)", kControlSolved, solved,
                kControlFailed, failed, kControlSeedsNeeded);
  report(6, solved >= kControlSeedsNeeded && failed >= kControlSeedsNeeded, detail);
}

void river() {
  auto cfg = default_config("riverswim");
  apply_regime(cfg, FeatureRegime::tile_linear);
  cfg.agent = "vbe";
  cfg.agent_config.k = 20;
  cfg.agent_config.c = 1.0;
  cfg.agent_config.tau = 4;
  cfg.steps = 50000;
  cfg.runs = 30;
  cfg.seed = 707;
  cfg.log_interval = 1000;

  // a policy that only ever collects the downstream reward earns at most this
  const double baseline = kDownstreamReward * cfg.steps;
  int above = 0;
  double lo = 1e300, hi = -1e300;
  for (const auto& r : run_many(cfg)) {
    const double total = r.log.records().back().metric;
    above += total > kRiverFactor * baseline;
    lo = std::min(lo, total);
    hi = std::max(hi, total);
  }
  report(7, above >= kRiverRunsNeeded,
         fmt("%d/30 runs above %.0f x %.0f (need %d), cumulative reward range [%.1f, %.1f]", above,
             kRiverFactor, baseline, kRiverRunsNeeded, lo, hi));
}

void bonus_decay() {
  auto r = verify::check_bonus_decay({});
  report(8, r.final_bonus < kBonusDecayMax,
         fmt("max bonus %.3e -> %.3e (limit %.0e)", r.initial_bonus, r.final_bonus, kBonusDecayMax));
}

void gradients() {
  auto r = verify::gradient_check(kGradDraws, 909);
  report(9, r.draws == kGradDraws && r.max_rel_error < kGradRelErr,
         fmt("max rel err %.3e over %d draws (limit %.0e)", r.max_rel_error, r.draws, kGradRelErr));
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "vbe_acceptance";
  std::filesystem::create_directories(dir);
  bool ok = true;
  std::string detail;
  std::vector<ExperimentConfig> cfgs;
  {
    auto c = default_config("deepsea");
    apply_regime(c, FeatureRegime::mlp);
    c.env.grid_size = 8;
    c.episodes = 200;
    c.runs = 2;
    c.agent_config.k = 4;
    cfgs.push_back(c);
    auto r = default_config("riverswim");
    apply_regime(r, FeatureRegime::tile_linear);
    r.agent = "bdqn";
    r.agent_config.k = 4;
    r.steps = 3000;
    r.runs = 2;
    cfgs.push_back(r);
  }
  for (std::size_t i = 0; i < cfgs.size(); ++i) {
    const auto a = dir / fmt("a%zu.csv", i), b = dir / fmt("b%zu.csv", i);
    write_csv(merge_logs(run_many(cfgs[i])), a);
    write_csv(merge_logs(run_many(cfgs[i])), b);
    const std::string ta = slurp(a), tb = slurp(b);
    const bool same = !ta.empty() && ta == tb;
    ok = ok && same;
    detail += fmt("%s/%s %zu bytes %s; ", cfgs[i].env.name.c_str(), cfgs[i].agent.c_str(), ta.size(),
                  same ? "identical" : "differ");
  }
  std::filesystem::remove_all(dir);
  report(10, ok, detail);
}

void target_policy() {
  auto cfg = default_config("deepsea");
  apply_regime(cfg, FeatureRegime::tabular);
  cfg.env.grid_size = 10;
  cfg.episodes = 1000;
  cfg.agent_config.k = 20;
  cfg.agent_config.tau = 64;
  cfg.seed = 1111;

  bool ok = true;
  std::string detail;
  for (std::string agent : {"vbe", "acb", "rnd"}) {
    cfg.agent = agent;
    cfg.agent_config.target_policy = core::TargetPolicy::greedy;
    auto g = run_single(cfg, cfg.seed, 0);
    cfg.agent_config.target_policy = core::TargetPolicy::optimistic;
    auto o = run_single(cfg, cfg.seed, 0);
    const bool done = g.episodes == cfg.episodes && o.episodes == cfg.episodes;
    const bool distinct = g.action_counts != o.action_counts;
    ok = ok && done && distinct;
    detail += fmt("%s right-actions greedy %ld optimistic %ld; ", agent.c_str(), g.action_counts[1],
                  o.action_counts[1]);
  }
  report(11, ok, detail);
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  fixed_point();
  telescoping();
  decomposition();
  optimism();
  bonus_decay();
  gradients();
  determinism();
  target_policy();
  coverage();
  river();
  control();
  std::printf("%d criteria failed, %.0f s total\n", failures, seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
