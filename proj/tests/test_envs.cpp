#include <cmath>
#include <set>

#include "doctest.h"
#include "vbe/common/errors.hpp"
#include "vbe/envs/deepsea.hpp"
#include "vbe/envs/factory.hpp"
#include "vbe/envs/mountaincar.hpp"
#include "vbe/envs/puddleworld.hpp"
#include "vbe/envs/riverswim.hpp"

using namespace vbe;
using namespace vbe::envs;

TEST_CASE("deepsea reset") {
  CHECK(deepsea_reset(10) == DeepseaState{0, 0, 10});
  CHECK(deepsea_state_count(50) == 1275);
  CHECK(deepsea_state_count(10) == 55);
  CHECK_THROWS_AS(deepsea_reset(0), InvalidParameter);

  auto s = deepsea_reset(1);
  auto t = deepsea_step(s, DeepseaAction::left, false);
  CHECK(t.next.terminal());
  CHECK(t.step.discount == 0.0);
}

TEST_CASE("deepsea step") {
  auto t = deepsea_step({0, 0, 10}, DeepseaAction::right, false);
  CHECK(t.step.reward == doctest::Approx(-0.001));
  CHECK(t.next == DeepseaState{1, 1, 10});
  CHECK(t.step.discount == 1.0);

  t = deepsea_step({9, 9, 10}, DeepseaAction::right, false);
  CHECK(t.step.reward == 1.0);
  CHECK(t.step.discount == 0.0);
  CHECK(t.step.terminal);

  t = deepsea_step({3, 0, 10}, DeepseaAction::left, false);
  CHECK(t.next == DeepseaState{4, 0, 10});
  CHECK(t.step.reward == 0.0);
  CHECK(t.step.discount == 1.0);

  CHECK_THROWS_AS(deepsea_step({10, 3, 10}, DeepseaAction::left, false), ContractViolation);
}

TEST_CASE("deepsea visited cells stay in the triangle") {
  Rng rng(3);
  for (int ep = 0; ep < 200; ++ep) {
    Deepsea env(12, false);
    env.reset(rng);
    int steps = 0;
    while (!env.state().terminal()) {
      env.step(uniform_int(rng, 0, 1), rng);
      ++steps;
      if (!env.state().terminal()) CHECK(env.state().col <= env.state().row);
    }
    CHECK(steps == 12);
  }
}

TEST_CASE("deepsea right-only return") {
  const int n = 10;
  Deepsea env(n, false);
  Rng rng(0);
  env.reset(rng);
  double ret = 0.0;
  for (int i = 0; i < n; ++i) ret += env.step(1, rng).reward;
  CHECK(ret == doctest::Approx(1.0 - (n - 1) * 0.01 / n).epsilon(1e-12));
}

TEST_CASE("deepsea reward-free emits zero") {
  Deepsea env(8, true);
  Rng rng(1);
  for (int ep = 0; ep < 100; ++ep) {
    env.reset(rng);
    for (int i = 0; i < 8; ++i) CHECK(env.step(uniform_int(rng, 0, 1), rng).reward == 0.0);
  }
  env.reset(rng);
  double r = 0.0;
  for (int i = 0; i < 8; ++i) r += env.step(1, rng).reward;
  CHECK(r == 0.0);
}

TEST_CASE("riverswim start and arithmetic") {
  RiverSwimParams p;
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    double x = riverswim_reset(p, rng);
    CHECK(x >= 0.9);
    CHECK(x <= 1.0);
  }
  p.noise_std = 0.0;
  auto out = riverswim_step(0.5, RiverAction::down, p, rng);
  CHECK(out.next_obs[0] == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(out.discount == 1.0);
  CHECK_FALSE(out.terminal);
}

TEST_CASE("riverswim displacement statistics") {
  RiverSwimParams p;
  Rng rng(11);
  const int n = 1000000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    double d = riverswim_step(0.3, RiverAction::down, p, rng).next_obs[0] - 0.3;
    sum += d;
    sq += d * d;
  }
  const double mean = sum / n;
  const double sd = std::sqrt(sq / n - mean * mean);
  CHECK(std::abs(mean - 0.1) < 3.0 * 0.01 / std::sqrt(double(n)));
  // std of a sample std is about sigma / sqrt(2n)
  CHECK(std::abs(sd - 0.01) < 3.0 * 0.01 / std::sqrt(2.0 * n));
}

TEST_CASE("riverswim rewards") {
  RiverSwimParams p;
  p.p_switch = 0.0;
  p.noise_std = 0.0;
  Rng rng(0);
  CHECK(riverswim_step(0.02, RiverAction::up, p, rng).reward == 1.0);
  CHECK(riverswim_step(0.02, RiverAction::down, p, rng).reward == 0.0);
  CHECK(riverswim_step(0.97, RiverAction::down, p, rng).reward == 0.005);
  CHECK(riverswim_step(0.5, RiverAction::up, p, rng).reward == 0.0);

  // switched moves still pay for the chosen action
  p.p_switch = 1.0;
  auto out = riverswim_step(0.03, RiverAction::up, p, rng);
  CHECK(out.reward == 1.0);
  CHECK(out.next_obs[0] == doctest::Approx(0.13));
}

TEST_CASE("riverswim consecutive up moves") {
  RiverSwimParams p;
  p.p_switch = 0.0;
  p.noise_std = 0.0;
  Rng rng(0);
  for (double x0 : {0.95, 0.42, 0.2}) {
    double x = x0;
    for (int k = 1; k <= 12; ++k) {
      x = riverswim_step(x, RiverAction::up, p, rng).next_obs[0];
      CHECK(x == doctest::Approx(std::max(0.0, x0 - 0.1 * k)).epsilon(1e-12));
    }
  }
}

TEST_CASE("puddleworld") {
  PuddleWorld env;
  Rng rng(2);
  for (int i = 0; i < 1000; ++i) {
    auto s = env.reset(rng);
    CHECK(s[0] >= 0.1);
    CHECK(s[0] <= 0.3);
    CHECK(s[1] >= 0.45);
    CHECK(s[1] <= 0.65);
  }

  PuddleWorldParams p;
  p.noise_std = 0.0;
  for (auto a : {PuddleAction::up, PuddleAction::down, PuddleAction::left, PuddleAction::right}) {
    auto out = puddleworld_step({0.97, 0.97}, a, p, rng);
    CHECK(out.terminal);
    CHECK(out.discount == 0.0);
  }

  CHECK(puddle_penalty(0.45, 0.6, p) == doctest::Approx(-400.0 * 0.1));
  CHECK(puddle_penalty(0.3, 0.75, p) == doctest::Approx(-40.0));
  CHECK(puddle_penalty(0.56, 0.6, p) == 0.0);
  CHECK(puddle_penalty(0.55, 0.6, p) == 0.0);
  CHECK(puddle_penalty(0.5, 0.6, p) == doctest::Approx(-400.0 * 0.05));

  auto out = puddleworld_step({0.2, 0.2}, PuddleAction::up, p, rng);
  CHECK(out.reward == -1.0);
}

TEST_CASE("mountaincar") {
  MountainCar env;
  Rng rng(4);
  for (int i = 0; i < 1000; ++i) {
    auto s = env.reset(rng);
    CHECK(s[0] >= -0.6);
    CHECK(s[0] <= -0.4);
    CHECK(s[1] == 0.0);
  }

  auto out = mountaincar_step({0.49, 0.05}, CarAction::forward);
  CHECK(out.reward == 1.0);
  CHECK(out.discount == 0.0);

  const double valley = -0.5236;
  out = mountaincar_step({valley, 0.0}, CarAction::coast);
  CHECK(out.next_obs[1] == doctest::Approx(-0.0025 * std::cos(3.0 * valley)).epsilon(1e-12));
  CHECK(out.reward == 0.0);
  CHECK(out.discount == 1.0);
}

TEST_CASE("continuous states stay in the box") {
  for (std::string name : {"riverswim", "puddleworld", "mountaincar_sparse"}) {
    EnvSpec spec;
    spec.name = name;
    auto env = make_environment(spec);
    Rng rng(7);
    env->reset(rng);
    int t = 0;
    for (int i = 0; i < 20000; ++i) {
      auto out = env->step(uniform_int(rng, 0, env->num_actions() - 1), rng);
      CHECK(env->box().contains(out.next_obs));
      if (out.terminal || (env->max_episode_steps() > 0 && ++t >= env->max_episode_steps())) {
        env->reset(rng);
        t = 0;
      }
    }
  }
}

TEST_CASE("factory") {
  EnvSpec spec;
  spec.name = "deepsea_pure";
  CHECK(make_environment(spec)->name() == "deepsea_pure");
  spec.name = "atari";
  CHECK_THROWS_AS(make_environment(spec), InvalidParameter);
}
