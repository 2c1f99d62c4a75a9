#pragma once

#include "vbe/explore/rqf_ensemble.hpp"
#include "vbe/verify/tabular_mdp.hpp"

namespace vbe::verify {

/// Ensemble of k tabular (one-hot, bias-free) target/predictor pairs over
/// `states` states, observation = {state index}. Indices >= states map to
/// an empty feature row.
explore::RqfEnsemble tabular_ensemble(int states, int actions, int k, Rng& rng,
                                      approx::InitScheme init = {approx::InitKind::gaussian_over_n, 1.0});

/// Feature map used by tabular_ensemble.
approx::FeatureMap tabular_features(int states);

/// Table [s * A + a] of a network's values over every state.
std::vector<double> value_table(const approx::Mlp& net, int states, int actions);

/// Max over members and (s, a) of |q^pi_i - f*_i|, where q^pi_i is the exact
/// policy value of the ensemble's random-target rewards.
double check_prop1(const TabularMDP& mdp, const explore::RqfEnsemble& ens);

/// Samples one trajectory of at most `horizon` steps under the policy and
/// returns |discounted reward sum + discounted tail - f*_i(s0, a0)|.
double telescoping_gap(const TabularMDP& mdp, const explore::RqfEnsemble& ens, int member, int horizon, Rng& rng);

/// Max over (s, a) of the difference between the ensemble bonus and its
/// expansion in next-step prediction gaps plus Bellman errors.
double check_prop2(const TabularMDP& mdp, const explore::RqfEnsemble& ens);

}  // namespace vbe::verify
