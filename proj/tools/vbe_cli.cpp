// Command-line front end: run, sweep, coverage, verify.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vbe/common/errors.hpp"
#include "vbe/harness/config.hpp"
#include "vbe/harness/runner.hpp"
#include "vbe/verify/suite.hpp"

namespace fs = std::filesystem;
using namespace vbe;

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

fs::path prepare_dir(const std::string& dir) {
  fs::path p(dir);
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw IoError("cannot create " + dir + ": " + ec.message());
  return p;
}

void save_config(const harness::ExperimentConfig& cfg, const fs::path& dir) {
  std::ofstream(dir / "config.ini") << harness::to_ini(cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Value bonuses with ensemble errors: experiments and checks"};
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "stdout format")->check(CLI::IsMember({"table", "csv"}));
  int threads = 1;
  app.add_option("--threads", threads, "worker threads for independent runs")->check(CLI::PositiveNumber);

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;

  auto* run = app.add_subcommand("run", "run every seed of one configuration");
  run->add_option("--config", config_path, "INI config file")->required()->check(CLI::ExistingFile);
  auto* run_seed = run->add_option("--seed", seed, "master seed (overrides the config)");
  run->add_option("--out", out_dir, "output directory (overrides the config)");

  std::vector<int> ks = harness::kDefaultSweepK;
  std::vector<double> cs = harness::kDefaultSweepC;
  auto* sweep = app.add_subcommand("sweep", "grid over ensemble size and bonus scale");
  sweep->add_option("--config", config_path, "INI config file")->required()->check(CLI::ExistingFile);
  sweep->add_option("--k", ks, "ensemble sizes")->delimiter(',');
  sweep->add_option("--c", cs, "bonus scales")->delimiter(',');
  auto* sweep_seed = sweep->add_option("--seed", seed, "master seed");
  sweep->add_option("--out", out_dir, "output directory");

  std::vector<int> grids{10, 20, 30, 40, 50};
  long episodes = 0;
  int runs = 0;
  auto* cover = app.add_subcommand("coverage", "reward-free Deepsea state coverage");
  cover->add_option("--grids", grids, "grid sizes")->delimiter(',');
  cover->add_option("--config", config_path, "INI config file (agent settings)")->check(CLI::ExistingFile);
  cover->add_option("--episodes", episodes, "episodes per run");
  cover->add_option("--runs", runs, "runs per grid");
  auto* cover_seed = cover->add_option("--seed", seed, "master seed");
  cover->add_option("--out", out_dir, "output directory");

  verify::VerifyOptions vopt;
  bool quick = false;
  auto* ver = app.add_subcommand("verify", "proposition and correctness checks");
  ver->add_option("--seed", vopt.seed, "seed");
  ver->add_flag("--quick", quick, "fewer draws and trials");

  CLI11_PARSE(app, argc, argv);
  const bool csv = format == "csv";

  try {
    if (*run) {
      harness::ExperimentConfig cfg = harness::load_config(config_path);
      if (*run_seed) cfg.seed = seed;
      if (!out_dir.empty()) cfg.output = out_dir;
      const fs::path dir = prepare_dir(cfg.output);
      const auto results = harness::run_many(cfg, threads);
      const harness::RunLog log = harness::merge_logs(results);
      harness::write_csv(log, dir / "runs.csv");
      save_config(cfg, dir);
      if (csv) {
        harness::write_csv(log, std::cout);
      } else {
        std::cout << "env " << cfg.env.name << ", agent " << cfg.agent << ", runs " << cfg.runs << "\n";
        for (std::size_t r = 0; r < results.size(); ++r) {
          const auto& res = results[r];
          const double last = res.log.empty() ? 0.0 : res.log.records().back().metric;
          std::cout << "run " << r << ": steps " << res.steps << ", episodes " << res.episodes << ", final metric "
                    << fmt(last);
          if (envs::is_deepsea(cfg.env.name)) std::cout << ", coverage " << res.coverage;
          std::cout << "\n";
        }
        std::cout << "final-window mean " << fmt(harness::final_window_mean(log)) << ", auc "
                  << fmt(harness::area_under_curve(log)) << "\nwrote " << (dir / "runs.csv").string() << "\n";
      }
    } else if (*sweep) {
      harness::ExperimentConfig cfg = harness::load_config(config_path);
      if (*sweep_seed) cfg.seed = seed;
      if (!out_dir.empty()) cfg.output = out_dir;
      const fs::path dir = prepare_dir(cfg.output);
      const auto cells = harness::run_sweep(cfg, ks, cs, threads);
      std::ostringstream summary;
      summary << "k,c,final_window_mean,auc\n";
      for (const auto& cell : cells) {
        harness::write_csv(cell.log, dir / ("cell_k" + std::to_string(cell.k) + "_c" + fmt(cell.c) + ".csv"));
        summary << cell.k << ',' << fmt(cell.c) << ',' << fmt(cell.final_mean) << ',' << fmt(cell.auc) << '\n';
      }
      std::ofstream(dir / "summary.csv") << summary.str();
      save_config(cfg, dir);
      if (csv) {
        std::cout << summary.str();
      } else {
        for (const auto& cell : cells) {
          std::printf("k=%-3d c=%-6g final %-12.6g auc %.6g\n", cell.k, cell.c, cell.final_mean, cell.auc);
        }
        const auto& best = harness::best_cell(cells);
        const auto& best_auc = harness::best_cell(cells, harness::Selection::auc);
        std::printf("best by final window: k=%d c=%g\nbest by auc: k=%d c=%g\n", best.k, best.c, best_auc.k,
                    best_auc.c);
      }
    } else if (*cover) {
      harness::ExperimentConfig cfg;
      if (!config_path.empty()) {
        cfg = harness::load_config(config_path);
      } else {
        cfg = harness::default_config("deepsea_pure");
        harness::apply_regime(cfg, harness::FeatureRegime::tabular);
        cfg.agent = "vbe";
        cfg.agent_config.k = 1;
        cfg.agent_config.c = 1.0;
        cfg.agent_config.tau = 64;
        cfg.stop_at_full_coverage = true;
      }
      if (episodes > 0) cfg.episodes = episodes, cfg.steps = 0;
      if (runs > 0) cfg.runs = runs;
      if (*cover_seed) cfg.seed = seed;
      if (!out_dir.empty()) cfg.output = out_dir;
      const fs::path dir = prepare_dir(cfg.output);
      const auto curves = harness::pure_exploration_run(grids, cfg, threads);
      std::ostringstream table;
      table << "grid,run,episodes,coverage,ceiling\n";
      for (const auto& curve : curves) {
        harness::write_csv(curve.log, dir / ("coverage_n" + std::to_string(curve.grid_size) + ".csv"));
        for (int r = 0; r < cfg.runs; ++r) {
          const auto recs = curve.log.run(r);
          const long eps = recs.empty() ? 0 : recs.back().episode;
          const long cov = recs.empty() ? 0 : recs.back().coverage;
          table << curve.grid_size << ',' << r << ',' << eps << ',' << cov << ',' << curve.ceiling << '\n';
        }
      }
      std::ofstream(dir / "coverage_summary.csv") << table.str();
      if (csv) {
        std::cout << table.str();
      } else {
        std::istringstream in(table.str());
        std::string line;
        std::getline(in, line);
        std::printf("%6s %4s %9s %9s %8s\n", "grid", "run", "episodes", "coverage", "ceiling");
        while (std::getline(in, line)) {
          int g, r;
          long e, c, ceil;
          if (std::sscanf(line.c_str(), "%d,%d,%ld,%ld,%ld", &g, &r, &e, &c, &ceil) == 5) {
            std::printf("%6d %4d %9ld %9ld %8ld\n", g, r, e, c, ceil);
          }
        }
      }
    } else if (*ver) {
      if (quick) {
        vopt.mdp_draws = 20;
        vopt.trajectories = 200;
        vopt.optimism_trials = 20000;
        vopt.gradient_draws = 20;
      }
      const auto rows = verify::run_verify(vopt);
      verify::write_report(rows, std::cout, csv);
      return verify::all_passed(rows) ? 0 : 1;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error [" << e.key() << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
