#include "vbe/verify/tabular_mdp.hpp"

#include <cmath>

#include "vbe/common/errors.hpp"

namespace vbe::verify {

void TabularMDP::validate() const {
  const std::size_t n = static_cast<std::size_t>(states) * actions;
  if (states < 1 || actions < 1) throw InvalidParameter("mdp: empty state or action set");
  if (p.size() != n * states || discount.size() != p.size() || reward.size() != n || policy.size() != n) {
    throw InvalidParameter("mdp: table sizes disagree");
  }
  for (int s = 0; s < states; ++s) {
    double pol = 0.0;
    for (int a = 0; a < actions; ++a) {
      if (pi(s, a) < 0.0) throw InvalidParameter("mdp: negative policy probability");
      pol += pi(s, a);
      double row = 0.0;
      for (int s2 = 0; s2 < states; ++s2) {
        if (prob(s, a, s2) < 0.0) throw InvalidParameter("mdp: negative transition probability");
        if (gamma(s, a, s2) < 0.0 || gamma(s, a, s2) > 1.0) throw InvalidParameter("mdp: discount outside [0, 1]");
        row += prob(s, a, s2);
      }
      if (std::abs(row - 1.0) > 1e-12) throw InvalidParameter("mdp: transition row does not sum to 1");
    }
    if (std::abs(pol - 1.0) > 1e-12) throw InvalidParameter("mdp: policy row does not sum to 1");
  }
}

namespace {

void normalize(std::vector<double>& v, std::size_t first, std::size_t count) {
  double sum = 0.0;
  for (std::size_t i = 0; i < count; ++i) sum += v[first + i];
  for (std::size_t i = 0; i < count; ++i) v[first + i] /= sum;
}

}  // namespace

TabularMDP random_mdp(const RandomMdpOptions& opt, Rng& rng) {
  if (opt.states < 1 || opt.actions < 1) throw InvalidParameter("random_mdp: need at least one state and action");
  TabularMDP m;
  m.states = opt.states;
  m.actions = opt.actions;
  const std::size_t n = static_cast<std::size_t>(m.states) * m.actions;
  m.p.assign(n * m.states, 0.0);
  m.discount.assign(n * m.states, opt.gamma);
  m.reward.assign(n, 0.0);
  m.policy.assign(n, 0.0);
  for (int s = 0; s < m.states; ++s) {
    for (int a = 0; a < m.actions; ++a) {
      if (opt.deterministic) {
        m.p[m.sas(s, a, uniform_int(rng, 0, m.states - 1))] = 1.0;
      } else {
        for (int s2 = 0; s2 < m.states; ++s2) m.p[m.sas(s, a, s2)] = uniform(rng, 0.0, 1.0);
        normalize(m.p, m.sas(s, a, 0), m.states);
      }
      for (int s2 = 0; s2 < m.states; ++s2) {
        if (bernoulli(rng, opt.terminal_prob)) m.discount[m.sas(s, a, s2)] = 0.0;
      }
      m.reward[m.sa(s, a)] = normal(rng);
      m.policy[m.sa(s, a)] = uniform(rng, 0.0, 1.0);
    }
    normalize(m.policy, m.sa(s, 0), m.actions);
  }
  return m;
}

std::vector<double> dp_policy_eval(const TabularMDP& mdp, const std::vector<double>& reward, double tol,
                                   int max_iter) {
  mdp.validate();
  const int S = mdp.states;
  const int A = mdp.actions;
  if (reward.size() != static_cast<std::size_t>(S) * A) throw InvalidParameter("dp: reward table size");
  std::vector<double> q(reward.size(), 0.0);
  std::vector<double> v(S, 0.0);
  for (int it = 0; it < max_iter; ++it) {
    for (int s = 0; s < S; ++s) {
      v[s] = 0.0;
      for (int a = 0; a < A; ++a) v[s] += mdp.pi(s, a) * q[mdp.sa(s, a)];
    }
    double delta = 0.0;
    for (int s = 0; s < S; ++s) {
      for (int a = 0; a < A; ++a) {
        double x = reward[mdp.sa(s, a)];
        for (int s2 = 0; s2 < S; ++s2) x += mdp.prob(s, a, s2) * mdp.gamma(s, a, s2) * v[s2];
        delta = std::max(delta, std::abs(x - q[mdp.sa(s, a)]));
        q[mdp.sa(s, a)] = x;
      }
    }
    if (delta < tol) return q;
  }
  throw DomainError("dp_policy_eval did not converge");
}

}  // namespace vbe::verify
