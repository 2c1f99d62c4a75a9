#include "vbe/verify/suite.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "vbe/verify/bonus_decay.hpp"
#include "vbe/verify/gradient_check.hpp"
#include "vbe/verify/optimism.hpp"
#include "vbe/verify/propositions.hpp"

namespace vbe::verify {

namespace {

CheckRow below(std::string name, double stat, double threshold) {
  return {std::move(name), stat, threshold, stat < threshold ? "pass" : "fail"};
}

TabularMDP draw_mdp(Rng& rng, bool allow_deterministic) {
  RandomMdpOptions o;
  o.states = uniform_int(rng, 2, 10);
  o.actions = uniform_int(rng, 1, 4);
  o.gamma = uniform(rng, 0.5, 0.95);
  o.terminal_prob = uniform(rng, 0.0, 0.3);
  o.deterministic = allow_deterministic && bernoulli(rng, 0.25);
  return random_mdp(o, rng);
}

}  // namespace

std::vector<CheckRow> run_verify(const VerifyOptions& opt) {
  std::vector<CheckRow> rows;

  {
    Rng rng = make_rng(opt.seed, 1, Stream::verify);
    double worst = 0.0;
    for (int d = 0; d < opt.mdp_draws; ++d) {
      const TabularMDP m = draw_mdp(rng, true);
      const auto ens = tabular_ensemble(m.states, m.actions, uniform_int(rng, 1, 4), rng);
      worst = std::max(worst, check_prop1(m, ens));
    }
    rows.push_back(below("rqf_fixed_point", worst, 1e-9));
  }
  {
    Rng rng = make_rng(opt.seed, 2, Stream::verify);
    double worst = 0.0;
    for (int d = 0; d < opt.trajectories; ++d) {
      const TabularMDP m = draw_mdp(rng, true);
      const auto ens = tabular_ensemble(m.states, m.actions, 1, rng);
      worst = std::max(worst, telescoping_gap(m, ens, 0, 200, rng));
    }
    rows.push_back(below("rqf_telescoping", worst, 1e-9));
  }
  {
    Rng rng = make_rng(opt.seed, 3, Stream::verify);
    double worst = 0.0;
    for (int d = 0; d < opt.mdp_draws; ++d) {
      const TabularMDP m = draw_mdp(rng, false);
      auto ens = tabular_ensemble(m.states, m.actions, uniform_int(rng, 1, 4), rng);
      worst = std::max(worst, check_prop2(m, ens));
    }
    rows.push_back(below("bonus_decomposition", worst, 1e-9));
  }

  for (int n : {64, 256}) {
    for (int k : {8, 20}) {
      for (double delta : {0.05, 0.1}) {
        OptimismCheckConfig cfg{n, k, delta, 1.0, opt.optimism_trials, opt.seed};
        const double cs[2] = {min_bonus_scale(n, k, delta, cfg.q_max, ThresholdForm::proof),
                              min_bonus_scale(n, k, delta, cfg.q_max, ThresholdForm::statement)};
        const auto rates = optimism_mc(cfg, cs);
        const double floor = 1.0 - delta - 3.0 * cfg.sigma();
        char tag[64];
        std::snprintf(tag, sizeof tag, "n=%d,k=%d,delta=%g", n, k, delta);
        rows.push_back({std::string("optimism_proof_form[") + tag + "]", rates[0], floor,
                        rates[0] >= floor ? "pass" : "fail"});
        rows.push_back({std::string("optimism_statement_form[") + tag + "]", rates[1], floor,
                        rates[1] >= floor ? "pass" : "flag"});
      }
    }
  }

  {
    BonusDecayConfig cfg;
    cfg.steps = opt.decay_steps;
    cfg.seed = opt.seed;
    rows.push_back(below("bonus_decay", check_bonus_decay(cfg).final_bonus, 1e-2));
  }
  rows.push_back(below("mlp_gradient", gradient_check(opt.gradient_draws, opt.seed).max_rel_error, 1e-4));
  return rows;
}

bool all_passed(const std::vector<CheckRow>& rows) {
  return std::none_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.verdict == "fail"; });
}

void write_report(const std::vector<CheckRow>& rows, std::ostream& out, bool csv) {
  char buf[256];
  if (csv) {
    out << "check,statistic,threshold,verdict\n";
    for (const auto& r : rows) {
      std::snprintf(buf, sizeof buf, "%.6g,%.6g", r.statistic, r.threshold);
      out << '"' << r.check << "\"," << buf << ',' << r.verdict << '\n';
    }
    return;
  }
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%-48s %12.6g %12.6g  %s\n", r.check.c_str(), r.statistic, r.threshold,
                  r.verdict.c_str());
    out << buf;
  }
}

}  // namespace vbe::verify
