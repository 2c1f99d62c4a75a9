#include <cmath>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "vbe/common/errors.hpp"
#include "vbe/envs/deepsea.hpp"
#include "vbe/harness/config.hpp"
#include "vbe/harness/coverage.hpp"
#include "vbe/harness/run_log.hpp"
#include "vbe/harness/runner.hpp"

using namespace vbe;
using namespace vbe::harness;

namespace {

ExperimentConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

std::string error_key(const std::string& text) {
  try {
    parse(text);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "";
}

ExperimentConfig small_deepsea(int n = 4, long episodes = 30) {
  auto cfg = parse("[env]\nname = deepsea\ngrid_size = " + std::to_string(n) +
                   "\n[agent]\nname = vbe\nfeatures = tabular\nbatch_size = 16\n[training]\nepisodes = " +
                   std::to_string(episodes) + "\nruns = 2\nseed = 3\n");
  return cfg;
}

}  // namespace

TEST_CASE("default budgets and metrics") {
  auto ds = default_config("deepsea");
  CHECK(ds.episodes == 10000);
  CHECK(ds.runs == 5);
  CHECK(ds.metric == Metric::return_undiscounted);
  CHECK(default_config("deepsea_pure").metric == Metric::coverage);

  auto rs = default_config("riverswim");
  CHECK(rs.steps == 50000);
  CHECK(rs.runs == 30);
  CHECK(rs.metric == Metric::cumulative_reward);
  CHECK(default_config("puddleworld").metric == Metric::return_undiscounted);
  CHECK(default_config("mountaincar_sparse").metric == Metric::return_discounted);
  CHECK(rs.agent_config.batch_size == 128);
  CHECK(rs.agent_config.learning_rate == 1e-3);
  CHECK(rs.agent_config.gamma == 0.99);

  apply_regime(rs, FeatureRegime::tile_linear);
  CHECK(rs.features.tiles == 4);
  CHECK(rs.features.tilings == 32);
  CHECK(rs.features.size == 128);
  auto mc = default_config("mountaincar_sparse");
  apply_regime(mc, FeatureRegime::tile_linear);
  CHECK(mc.features.tilings == 16);
  CHECK(mc.features.size == 512);
}

TEST_CASE("config parsing") {
  auto cfg = parse(
      "[env]\nname = riverswim\np_switch = 0.1\n"
      "[agent]\nname = bdqn\nk = 8\nc = 3\ntau = 16\ntarget_policy = optimistic\nfeatures = tile_linear\n"
      "[training]\nsteps = 2000\nruns = 4\nseed = 42\n"
      "[logging]\ninterval = 50\noutput = results\n");
  CHECK(cfg.env.name == "riverswim");
  CHECK(cfg.env.river.p_switch == 0.1);
  CHECK(cfg.agent == "bdqn");
  CHECK(cfg.agent_config.k == 8);
  CHECK(cfg.agent_config.c == 3.0);
  CHECK(cfg.agent_config.tau == 16);
  CHECK(cfg.agent_config.target_policy == core::TargetPolicy::optimistic);
  CHECK(cfg.features.regime == FeatureRegime::tile_linear);
  CHECK(cfg.steps == 2000);
  CHECK(cfg.runs == 4);
  CHECK(cfg.seed == 42);
  CHECK(cfg.log_interval == 50);
  CHECK(cfg.output == "results");

  auto again = parse(to_ini(cfg));
  CHECK(to_ini(again) == to_ini(cfg));
}

TEST_CASE("config errors name the key") {
  CHECK(error_key("[agent]\nbogus = 1\n") == "agent.bogus");
  CHECK(error_key("[agent]\nk = many\n") == "agent.k");
  CHECK(error_key("[agent]\nc = -1\n") == "agent.c");
  CHECK(error_key("[agent]\nname = ppo\n") == "agent.name");
  CHECK(error_key("[agent]\nfeatures = fourier\n") == "agent.features");
  CHECK(error_key("[env]\nname = atari\n") == "env.name");
  CHECK(error_key("[env]\nname = deepsea\np_switch = 0.3\n") == "env.p_switch");
  CHECK(error_key("[training]\nruns = 0\n") == "training.runs");
  CHECK(error_key("[training]\nstop_at_full_coverage = maybe\n") == "training.stop_at_full_coverage");
  CHECK(error_key("[logging]\nmetric = regret\n") == "logging.metric");
  CHECK(error_key("[plots]\nx = 1\n") == "plots");
  CHECK(error_key("[env]\nname = riverswim\n[agent]\nfeatures = tabular\n") == "agent.features");
  CHECK_THROWS_AS(load_config("/nonexistent/run.ini"), IoError);
}

TEST_CASE("coverage tracker") {
  CHECK(CoverageTracker(50).ceiling() == 1275);
  CHECK(CoverageTracker(10).ceiling() == 55);

  CoverageTracker cov(3);
  CHECK(cov.visit(0, 0));
  CHECK_FALSE(cov.visit(0, 0));
  CHECK_FALSE(cov.visit(3, 1));
  cov.end_episode();
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c <= r; ++c) cov.visit(r, c);
  }
  cov.end_episode();
  CHECK(cov.full());
  CHECK(cov.history() == std::vector<int>{1, 6});
}

TEST_CASE("random policy reaches the rewarding corner with probability 2^-N") {
  const int n = 5, episodes = 100000;
  Rng rng(8);
  long hits = 0;
  for (int e = 0; e < episodes; ++e) {
    auto s = envs::deepsea_reset(n);
    double r = 0.0;
    while (!s.terminal()) {
      auto t = envs::deepsea_step(s, envs::DeepseaAction(uniform_int(rng, 0, 1)), false);
      r = t.step.reward;
      s = t.next;
    }
    hits += r == 1.0;
  }
  const double p = std::pow(2.0, -n);
  CHECK(std::abs(double(hits) / episodes - p) < 3 * std::sqrt(p * (1 - p) / episodes));
}

TEST_CASE("run log csv") {
  RunLog empty;
  CHECK(to_csv(empty) == std::string(kCsvHeader) + "\n");

  RunLog log;
  for (int run = 0; run < 2; ++run) {
    for (int i = 1; i <= 3; ++i) log.append({run, 17u + run, i * 10L, i, 0.1234567 * i - run, i});
  }
  const std::string text = to_csv(log);
  CHECK(std::count(text.begin(), text.end(), '\n') == 7);
  std::istringstream in(text);
  RunLog back = read_csv(in);
  CHECK(to_csv(back) == text);
  REQUIRE(back.size() == 6);
  CHECK(back.records()[1].metric == doctest::Approx(0.246913).epsilon(1e-9));
  CHECK(back.run(1).size() == 3);

  CHECK_THROWS_AS(log.append({1, 18, 5, 1, 0.0, 0}), ContractViolation);
  CHECK_THROWS_AS(log.append({0, 17, 40, 4, 0.0, 0}), ContractViolation);
  CHECK_THROWS_AS(write_csv(log, std::filesystem::path("/nonexistent/dir/x.csv")), IoError);
}

TEST_CASE("summary statistics") {
  RunLog log;
  for (int run = 0; run < 2; ++run) {
    for (int i = 1; i <= 10; ++i) log.append({run, 0, i, i, double(i + run), 0});
  }
  CHECK(final_window_mean(log, 0.1) == doctest::Approx((10 + 11) / 2.0));
  CHECK(final_window_mean(log, 0.2) == doctest::Approx((9.5 + 10.5) / 2.0));
  CHECK(area_under_curve(log) == doctest::Approx((5.5 + 6.5) / 2.0));
}

TEST_CASE("runs are deterministic and isolated") {
  auto cfg = small_deepsea();
  auto a = run_single(cfg, 3, 1);
  auto b = run_single(cfg, 3, 1);
  CHECK(to_csv(a.log) == to_csv(b.log));
  CHECK(a.action_counts == b.action_counts);
  CHECK(a.episodes == 30);
  CHECK(a.steps == 30 * 4);

  auto many = run_many(cfg, 1);
  REQUIRE(many.size() == 2);
  CHECK(to_csv(many[1].log) == to_csv(a.log));
  cfg.runs = 3;
  auto more = run_many(cfg, 2);
  CHECK(to_csv(more[1].log) == to_csv(a.log));
  CHECK(to_csv(merge_logs(more)).size() > to_csv(merge_logs(many)).size());
}

TEST_CASE("every agent runs on every environment") {
  for (std::string env : {"deepsea", "riverswim", "puddleworld", "mountaincar_sparse"}) {
    for (std::string agent : {"vbe", "vbe_sl", "bdqn", "dqn_p", "rnd", "acb", "ddqn_eps"}) {
      auto cfg = default_config(env);
      cfg.agent = agent;
      cfg.agent_config.batch_size = 4;
      cfg.agent_config.k = 2;
      cfg.episodes = env == "deepsea" ? 3 : 0;
      cfg.steps = 300;
      cfg.log_interval = 100;
      auto res = run_single(cfg, 1, 0);
      CHECK(res.steps > 0);
      if (env == "riverswim") CHECK(res.log.size() == 3);
    }
  }
}

TEST_CASE("sweep") {
  auto cfg = small_deepsea(3, 5);
  cfg.runs = 1;
  auto cells = run_sweep(cfg);
  CHECK(cells.size() == 12);
  CHECK(cells[0].k == 1);
  CHECK(cells[11].k == 20);
  CHECK(cells[11].c == 10.0);

  auto solo = cfg;
  solo.agent_config.k = 8;
  solo.agent_config.c = 3.0;
  auto one = run_sweep(solo, {8}, {3.0});
  REQUIRE(one.size() == 1);
  CHECK(to_csv(one[0].log) == to_csv(run_single(solo, cfg.seed, 0).log));
  CHECK(to_csv(cells[2 * 3 + 1].log) == to_csv(one[0].log));

  const auto& best = best_cell(cells);
  for (const auto& c : cells) CHECK(best.final_mean >= c.final_mean);
}

TEST_CASE("pure exploration coverage curves") {
  auto cfg = default_config("deepsea_pure");
  apply_regime(cfg, FeatureRegime::tabular);
  cfg.episodes = 40;
  cfg.runs = 2;
  cfg.agent_config.batch_size = 16;
  auto curves = pure_exploration_run({4, 6}, cfg);
  REQUIRE(curves.size() == 2);
  CHECK(curves[0].ceiling == 10);
  CHECK(curves[1].ceiling == 21);
  for (const auto& c : curves) {
    for (int run = 0; run < 2; ++run) {
      auto recs = c.log.run(run);
      REQUIRE(!recs.empty());
      for (std::size_t i = 1; i < recs.size(); ++i) CHECK(recs[i].metric >= recs[i - 1].metric);
      CHECK(recs.back().metric <= c.ceiling);
      CHECK(recs.back().metric == recs.back().coverage);
    }
  }
}
