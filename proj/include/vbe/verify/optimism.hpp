#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace vbe::verify {

/// z(delta) with Pr(X > z(delta)) = 1 - delta for standard normal X, i.e.
/// the delta-quantile. Negative for delta < 1/2.
double z_quantile(double delta);

enum class ThresholdForm { statement, proof };

/// log(k/2) - log(log(2/delta)); must be positive for the threshold to exist.
double threshold_log_term(int k, double delta);

/// sqrt(n/pi) (q_max - z(delta/2)/sqrt(n)) / L for the statement form and
/// the same over sqrt(L) for the proof form, L = threshold_log_term(k, delta).
/// Throws DomainError when L <= 0.
double min_bonus_scale(int n, int k, double delta, double q_max, ThresholdForm form);

struct OptimismCheckConfig {
  int n = 64;
  int k = 20;
  double delta = 0.1;
  double q_max = 1.0;
  long trials = 100000;
  std::uint64_t seed = 0;

  /// Binomial standard error of a rate of 1 - delta over `trials`.
  double sigma() const;
  /// Throws InvalidParameter unless 3 sigma < delta / 2.
  void validate() const;
};

/// Fraction of trials with q + c max_i |f*_i - f_hat_i| > q_max, where each
/// trial draws a unit-norm feature vector and N(0, 1/n) weights for q and
/// for every target and predictor. One rate per entry of cs, all from the
/// same draws.
std::vector<double> optimism_mc(const OptimismCheckConfig& cfg, std::span<const double> cs);
double optimism_mc(const OptimismCheckConfig& cfg, double c);

}  // namespace vbe::verify
