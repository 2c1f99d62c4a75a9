#include "vbe/verify/propositions.hpp"

#include <algorithm>
#include <cmath>

#include "vbe/common/errors.hpp"

namespace vbe::verify {

approx::FeatureMap tabular_features(int states) {
  return approx::FeatureMap::one_hot(states, 1, [states](std::span<const double> obs) {
    const int s = static_cast<int>(obs[0]);
    return s >= 0 && s < states ? s : -1;
  });
}

explore::RqfEnsemble tabular_ensemble(int states, int actions, int k, Rng& rng, approx::InitScheme init) {
  core::AgentContext ctx{tabular_features(states), actions, {{}, false, init}, {}, 0, 0};
  ctx.config.k = k;
  return explore::RqfEnsemble(ctx, rng);
}

std::vector<double> value_table(const approx::Mlp& net, int states, int actions) {
  approx::SparseRows phi(states);
  for (int s = 0; s < states; ++s) {
    phi.push(s, 1.0);
    phi.close_row();
  }
  const Eigen::MatrixXd v = net.values(phi);
  if (v.rows() != actions) throw InvalidParameter("value_table: action count mismatch");
  std::vector<double> out(static_cast<std::size_t>(states) * actions);
  for (int s = 0; s < states; ++s) {
    for (int a = 0; a < actions; ++a) out[s * actions + a] = v(a, s);
  }
  return out;
}

namespace {

void check_shapes(const TabularMDP& mdp, const explore::RqfEnsemble& ens) {
  mdp.validate();
  if (ens.size() < 1 || ens.target(0).architecture().input_dim != mdp.states ||
      ens.target(0).outputs() != mdp.actions) {
    throw InvalidParameter("ensemble does not match the MDP");
  }
}

// Every (s, a, s', a') as one batch row, in lexicographic order.
core::EncodedBatch enumerate_transitions(const TabularMDP& mdp, std::vector<int>& next_actions) {
  const int S = mdp.states;
  const int A = mdp.actions;
  core::EncodedBatch b{approx::SparseRows(S), approx::SparseRows(S), {}, {}, {}};
  next_actions.clear();
  for (int s = 0; s < S; ++s) {
    for (int a = 0; a < A; ++a) {
      for (int s2 = 0; s2 < S; ++s2) {
        for (int a2 = 0; a2 < A; ++a2) {
          b.phi.push(s, 1.0);
          b.phi.close_row();
          b.phi_next.push(s2, 1.0);
          b.phi_next.close_row();
          b.actions.push_back(a);
          b.rewards.push_back(0.0);
          b.discounts.push_back(mdp.gamma(s, a, s2));
          next_actions.push_back(a2);
        }
      }
    }
  }
  return b;
}

}  // namespace

double check_prop1(const TabularMDP& mdp, const explore::RqfEnsemble& ens) {
  check_shapes(mdp, ens);
  const int S = mdp.states;
  const int A = mdp.actions;
  std::vector<int> next;
  const core::EncodedBatch batch = enumerate_transitions(mdp, next);
  double gap = 0.0;
  for (int i = 0; i < ens.size(); ++i) {
    const Eigen::VectorXd r = ens.rewards(i, batch, next);
    std::vector<double> expected(static_cast<std::size_t>(S) * A, 0.0);
    int row = 0;
    for (int s = 0; s < S; ++s) {
      for (int a = 0; a < A; ++a) {
        for (int s2 = 0; s2 < S; ++s2) {
          for (int a2 = 0; a2 < A; ++a2, ++row) expected[mdp.sa(s, a)] += mdp.prob(s, a, s2) * mdp.pi(s2, a2) * r[row];
        }
      }
    }
    const std::vector<double> q = dp_policy_eval(mdp, expected);
    const std::vector<double> f = value_table(ens.target(i), S, A);
    for (std::size_t j = 0; j < q.size(); ++j) gap = std::max(gap, std::abs(q[j] - f[j]));
  }
  return gap;
}

namespace {

int draw(const std::vector<double>& table, std::size_t first, int count, Rng& rng) {
  double u = uniform(rng, 0.0, 1.0);
  for (int i = 0; i < count - 1; ++i) {
    u -= table[first + i];
    if (u < 0.0) return i;
  }
  return count - 1;
}

}  // namespace

double telescoping_gap(const TabularMDP& mdp, const explore::RqfEnsemble& ens, int member, int horizon, Rng& rng) {
  check_shapes(mdp, ens);
  const int S = mdp.states;
  const int A = mdp.actions;
  const std::vector<double> f = value_table(ens.target(member), S, A);

  int s = uniform_int(rng, 0, S - 1);
  int a = draw(mdp.policy, mdp.sa(s, 0), A, rng);
  const double start = f[mdp.sa(s, a)];
  double sum = 0.0;
  double weight = 1.0;
  for (int t = 0; t < horizon; ++t) {
    const int s2 = draw(mdp.p, mdp.sas(s, a, 0), S, rng);
    const int a2 = draw(mdp.policy, mdp.sa(s2, 0), A, rng);
    core::EncodedBatch one{approx::SparseRows(S), approx::SparseRows(S), {a}, {0.0}, {mdp.gamma(s, a, s2)}};
    one.phi.push(s, 1.0);
    one.phi.close_row();
    one.phi_next.push(s2, 1.0);
    one.phi_next.close_row();
    const int next[1] = {a2};
    sum += weight * ens.rewards(member, one, next)[0];
    weight *= mdp.gamma(s, a, s2);
    s = s2;
    a = a2;
    if (weight == 0.0) break;
  }
  return std::abs(sum + weight * f[mdp.sa(s, a)] - start);
}

double check_prop2(const TabularMDP& mdp, const explore::RqfEnsemble& ens) {
  check_shapes(mdp, ens);
  const int S = mdp.states;
  const int A = mdp.actions;
  std::vector<std::vector<double>> f, g;
  for (int i = 0; i < ens.size(); ++i) {
    f.push_back(value_table(ens.target(i), S, A));
    g.push_back(value_table(ens.predictor(i), S, A));
  }
  approx::SparseRows all(S);
  for (int s = 0; s < S; ++s) {
    all.push(s, 1.0);
    all.close_row();
  }
  const Eigen::MatrixXd bonus = ens.bonus(all);

  double gap = 0.0;
  for (int s = 0; s < S; ++s) {
    for (int a = 0; a < A; ++a) {
      double rhs = 0.0;
      for (int i = 0; i < ens.size(); ++i) {
        // E[R_i] = f(s, a) - E[gamma f(S', A')]; eps = g(s, a) - E[R_i + gamma g(S', A')].
        double next_f = 0.0;
        double next_g = 0.0;
        for (int s2 = 0; s2 < S; ++s2) {
          for (int a2 = 0; a2 < A; ++a2) {
            const double w = mdp.prob(s, a, s2) * mdp.gamma(s, a, s2) * mdp.pi(s2, a2);
            next_f += w * f[i][mdp.sa(s2, a2)];
            next_g += w * g[i][mdp.sa(s2, a2)];
          }
        }
        const double expected_reward = f[i][mdp.sa(s, a)] - next_f;
        const double eps = g[i][mdp.sa(s, a)] - (expected_reward + next_g);
        rhs = std::max(rhs, std::abs(next_g - next_f + eps));
      }
      gap = std::max(gap, std::abs(bonus(a, s) - rhs));
    }
  }
  return gap;
}

}  // namespace vbe::verify
