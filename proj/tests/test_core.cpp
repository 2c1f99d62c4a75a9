#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>

#include "doctest.h"
#include "vbe/common/errors.hpp"
#include "vbe/core/agent_config.hpp"
#include "vbe/core/ddqn.hpp"
#include "vbe/core/ddqn_agent.hpp"
#include "vbe/core/policy.hpp"
#include "vbe/core/replay_buffer.hpp"

using namespace vbe;
using namespace vbe::core;
using approx::FeatureMap;
using approx::Mlp;

namespace {

FeatureMap tabular(int states) {
  return FeatureMap::one_hot(states, 1, [states](std::span<const double> o) {
    const int s = static_cast<int>(o[0]);
    return s >= states ? -1 : s;
  });
}

Mlp table_net(int states, int actions) { return Mlp({states, {}, actions, false}); }

Transition tr(double s, int a, double r, double s2, double discount) { return {{s}, a, r, {s2}, discount}; }

}  // namespace

TEST_CASE("agent config defaults") {
  AgentConfig cfg;
  CHECK(cfg.batch_size == 128);
  CHECK(cfg.learning_rate == 1e-3);
  CHECK(cfg.gamma == 0.99);
  CHECK(cfg.buffer_capacity == 50000);
  CHECK(cfg.target_policy == TargetPolicy::greedy);
  CHECK_NOTHROW(cfg.validate());
  cfg.c = -1.0;
  CHECK_THROWS_AS(cfg.validate(), InvalidParameter);
  CHECK(parse_target_policy("optimistic") == TargetPolicy::optimistic);
  CHECK_THROWS(parse_target_policy("lazy"));
}

TEST_CASE("replay buffer fifo") {
  ReplayBuffer buf(2);
  buf.add(tr(0, 0, 1, 0, 1));
  CHECK(buf.size() == 1);
  buf.add(tr(0, 0, 2, 0, 1));
  buf.add(tr(0, 0, 3, 0, 1));
  CHECK(buf.size() == 2);
  CHECK(buf[0].r == 2);
  CHECK(buf[1].r == 3);

  ReplayBuffer big;
  CHECK(big.capacity() == 50000);
  for (int i = 0; i < 50001; ++i) big.add(tr(0, 0, i, 0, 1));
  CHECK(big.size() == 50000);
  CHECK(big[0].r == 1);
  CHECK(big[49999].r == 50000);
  Rng rng(0);
  for (auto* t : big.sample(5000, rng)) CHECK(t->r != 0);
}

TEST_CASE("replay buffer sampling") {
  ReplayBuffer buf(10);
  Rng rng(1);
  CHECK_THROWS_AS(buf.sample(3, rng), CannotSample);

  buf.add(tr(4, 1, 0.5, 5, 1));
  auto one = buf.sample(3, rng);
  REQUIRE(one.size() == 3);
  for (auto* t : one) CHECK(t->s[0] == 4);

  for (int i = 1; i < 10; ++i) buf.add(tr(i, 0, 0, 0, 1));
  std::vector<double> counts(10, 0.0);
  const int n = 100000;
  for (auto i : buf.sample_indices(n, rng)) counts[i] += 1.0;
  double chi2 = 0.0;
  for (double c : counts) chi2 += (c - n / 10.0) * (c - n / 10.0) / (n / 10.0);
  boost::math::chi_squared_distribution<double> dist(9);
  CHECK(chi2 < boost::math::quantile(dist, 0.99));
}

TEST_CASE("target net sync") {
  Rng rng(2);
  Mlp net({3, {4}, 2, true});
  net.initialize({}, rng);
  TargetNetPair pair(net, {}, 3);
  CHECK(pair.frozen().params() == pair.live().params());
  const Eigen::VectorXd start = pair.frozen().params();
  for (int step = 1; step <= 9; ++step) {
    pair.live().mutable_params().array() += 0.1;
    const bool synced = pair.tick();
    CHECK(synced == (step % 3 == 0));
    if (synced) {
      CHECK(pair.frozen().params() == pair.live().params());
    } else if (step < 3) {
      CHECK(pair.frozen().params() == start);
    } else {
      CHECK(pair.frozen().params() != pair.live().params());
    }
  }
  CHECK_THROWS_AS(TargetNetPair(net, {}, 0), InvalidParameter);
}

TEST_CASE("ddqn target") {
  auto phi = tabular(2);
  Mlp live = table_net(2, 2), frozen = table_net(2, 2);
  Rng rng(3);

  CHECK(ddqn_target(live, frozen, phi, tr(0, 0, 1.0, 2, 0.0), rng) == 1.0);

  live.mutable_params().setConstant(2.0);
  frozen.mutable_params().setConstant(2.0);
  CHECK(ddqn_target(live, frozen, phi, tr(0, 0, 0.0, 1, 0.99), rng) == doctest::Approx(1.98));

  // live prefers action 0 at state 1, frozen rates action 1 higher
  live.weight(0)(0, 1) = 5.0;
  live.weight(0)(1, 1) = 1.0;
  frozen.weight(0)(0, 1) = 0.3;
  frozen.weight(0)(1, 1) = 9.0;
  CHECK(ddqn_target(live, frozen, phi, tr(0, 1, 1.0, 1, 0.5), rng) == doctest::Approx(1.0 + 0.5 * 0.3));
}

TEST_CASE("ddqn update") {
  auto phi = tabular(3);
  Rng rng(4);

  SUBCASE("zero td error leaves parameters") {
    Mlp live = table_net(3, 2);
    live.mutable_params().setConstant(1.0);
    Mlp frozen = live;
    approx::Optimizer opt({approx::OptimizerKind::adam, 0.1}, live.num_params());
    Transition t = tr(0, 1, 0.5, 1, 0.5);
    std::vector<const Transition*> b{&t, &t};
    auto batch = encode_batch(b, phi);
    const Eigen::VectorXd before = live.params();
    CHECK(ddqn_update(live, frozen, opt, batch, rng) == 0.0);
    CHECK(live.params() == before);
  }

  SUBCASE("tabular sgd moves by lr times td error") {
    Mlp live = table_net(3, 2);
    live.weight(0)(1, 0) = 0.4;
    Mlp frozen = live;
    frozen.weight(0)(0, 2) = 3.0;
    const double lr = 0.3;
    approx::Optimizer opt({approx::OptimizerKind::sgd, lr}, live.num_params());
    Transition t = tr(0, 1, 1.0, 2, 0.9);
    std::vector<const Transition*> b{&t};
    auto batch = encode_batch(b, phi);
    const double delta = 1.0 + 0.9 * 3.0 - 0.4;
    std::vector<int> next{0};
    CHECK(ddqn_update(live, frozen, opt, batch, next) == doctest::Approx(0.5 * delta * delta));
    CHECK(live.weight(0)(1, 0) == doctest::Approx(0.4 + lr * delta));
    CHECK(live.weight(0)(0, 0) == 0.0);
  }

  SUBCASE("converges on a deterministic chain") {
    // s -> s + 1 under both actions, leaving state 2 ends the episode
    const double r[3][2] = {{0.0, 0.5}, {1.0, 0.0}, {0.0, 2.0}};
    const double g = 0.9;
    std::vector<Transition> ts;
    for (int s = 0; s < 3; ++s) {
      for (int a = 0; a < 2; ++a) ts.push_back(tr(s, a, r[s][a], s + 1, s == 2 ? 0.0 : g));
    }
    std::vector<const Transition*> b;
    for (auto& t : ts) b.push_back(&t);
    auto batch = encode_batch(b, phi);

    TargetNetPair q(table_net(3, 2), {approx::OptimizerKind::sgd, 1.0}, 1);
    for (int i = 0; i < 3000; ++i) {
      ddqn_update(q.live(), q.frozen(), q.optimizer(), batch, rng);
      q.tick();
    }
    const double v2 = 2.0, v1 = 1.0 + g * v2;
    const double expect[3][2] = {{g * v1, 0.5 + g * v1}, {v1, g * v2}, {0.0, 2.0}};
    auto values = q.live().values(batch.phi);
    for (int s = 0; s < 3; ++s) {
      for (int a = 0; a < 2; ++a) CHECK(std::abs(values(a, 2 * s) - expect[s][a]) < 1e-3);
    }
  }
}

TEST_CASE("optimistic action selection") {
  Rng rng(5);
  Eigen::Vector3d q(0.2, 1.0, -0.3);
  Eigen::Vector3d b(5.0, 0.0, 9.0);
  CHECK(select_action_optimistic(q, b, 0.0, rng) == 1);
  CHECK(select_action_optimistic(q, Eigen::Vector3d::Zero(), 2.0, rng) == 1);
  CHECK(select_action_optimistic(Eigen::Vector2d(1, 0), Eigen::Vector2d(0, 2), 1.0, rng) == 1);
  CHECK_THROWS_AS(select_action_optimistic(q, b, -1.0, rng), InvalidParameter);

  // adding a constant to q + c b keeps the tie-break distribution
  Eigen::Vector3d tied(1.0, 1.0, 0.0);
  Rng r1(9), r2(9);
  std::vector<int> counts(3, 0);
  for (int i = 0; i < 1000; ++i) {
    const int a = select_action_optimistic(tied, Eigen::Vector3d::Zero(), 1.0, r1);
    CHECK(a == select_action_optimistic((tied.array() + 5.0).matrix(), Eigen::Vector3d::Zero(), 1.0, r2));
    ++counts[a];
  }
  CHECK(counts[2] == 0);
  CHECK(counts[0] > 400);
  CHECK(counts[1] > 400);
}

TEST_CASE("epsilon-greedy frequencies") {
  Rng rng(6);
  Eigen::Vector4d q(0.0, 3.0, 1.0, 2.0);
  for (int i = 0; i < 100; ++i) CHECK(select_action_epsgreedy(q, 0.0, rng) == 1);

  const int n = 100000;
  std::vector<double> counts(4, 0.0);
  for (int i = 0; i < n; ++i) counts[select_action_epsgreedy(q, 1.0, rng)] += 1.0;
  const double sd = std::sqrt(0.25 * 0.75 / n);
  for (double c : counts) CHECK(std::abs(c / n - 0.25) < 3 * sd);

  long nongreedy = 0;
  for (int i = 0; i < n; ++i) nongreedy += select_action_epsgreedy(q, 0.1, rng) != 1;
  const double p = 0.1 * 3.0 / 4.0;
  CHECK(std::abs(double(nongreedy) / n - p) < 3 * std::sqrt(p * (1 - p) / n));
  CHECK_THROWS_AS(select_action_epsgreedy(q, 1.5, rng), InvalidParameter);
}

TEST_CASE("ddqn agent smoke") {
  AgentContext ctx{tabular(3), 2, {}, {}, 0, 0};
  ctx.config.batch_size = 4;
  ctx.config.tau = 2;
  ctx.seed = 11;
  DdqnAgent agent(ctx);
  CHECK(agent.name() == "ddqn_eps");
  const Eigen::VectorXd before = agent.q().live().params();
  for (int i = 0; i < 20; ++i) {
    Observation s{double(i % 3)};
    const int a = agent.act(s);
    CHECK((a == 0 || a == 1));
    agent.observe(tr(i % 3, a, 1.0, (i + 1) % 3, 0.9));
  }
  CHECK(agent.buffer().size() == 20);
  CHECK(agent.q().live().params() != before);
  CHECK(agent.q().steps_since_sync() == 0);
}
