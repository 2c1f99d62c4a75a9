#pragma once

#include <vector>

#include "vbe/common/random.hpp"

namespace vbe::verify {

/// Finite MDP with transition-based discounts and a fixed stochastic policy.
struct TabularMDP {
  int states = 0;
  int actions = 0;
  std::vector<double> p;         // [(s * A + a) * S + s']
  std::vector<double> discount;  // same layout as p
  std::vector<double> reward;    // expected reward, [s * A + a]
  std::vector<double> policy;    // [s * A + a]

  int sa(int s, int a) const { return s * actions + a; }
  int sas(int s, int a, int s2) const { return sa(s, a) * states + s2; }
  double prob(int s, int a, int s2) const { return p[sas(s, a, s2)]; }
  double gamma(int s, int a, int s2) const { return discount[sas(s, a, s2)]; }
  double pi(int s, int a) const { return policy[sa(s, a)]; }

  /// Throws InvalidParameter when a row does not sum to 1 within 1e-12, or
  /// has negative entries, or discounts leave [0, 1].
  void validate() const;
};

struct RandomMdpOptions {
  int states = 5;
  int actions = 2;
  double gamma = 0.9;
  double terminal_prob = 0.1;  // chance a given (s, a, s') transition has discount 0
  bool deterministic = false;  // one successor per (s, a)
};

TabularMDP random_mdp(const RandomMdpOptions& opt, Rng& rng);

/// Exact policy evaluation of `reward` ([s * A + a], expected per-step
/// reward) by Bellman iteration until the sup-norm change is below `tol`.
/// Throws DomainError if it fails to converge within max_iter sweeps.
std::vector<double> dp_policy_eval(const TabularMDP& mdp, const std::vector<double>& reward,
                                   double tol = 1e-12, int max_iter = 1000000);

}  // namespace vbe::verify
