#include "vbe/verify/optimism.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/constants/constants.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/random/normal_distribution.hpp>

#include "vbe/common/errors.hpp"
#include "vbe/common/random.hpp"

namespace vbe::verify {

double z_quantile(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidParameter("z_quantile: delta must lie in (0, 1)");
  return boost::math::quantile(boost::math::normal_distribution<double>(0.0, 1.0), delta);
}

double threshold_log_term(int k, double delta) {
  if (k < 1) throw InvalidParameter("ensemble size must be >= 1");
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidParameter("delta must lie in (0, 1)");
  return std::log(k / 2.0) - std::log(std::log(2.0 / delta));
}

double min_bonus_scale(int n, int k, double delta, double q_max, ThresholdForm form) {
  if (n < 1) throw InvalidParameter("feature dimension must be >= 1");
  const double L = threshold_log_term(k, delta);
  if (!(L > 0.0)) throw DomainError("bonus-scale threshold needs k > 2 log(2/delta)");
  const double root_n = std::sqrt(static_cast<double>(n));
  const double numer = std::sqrt(n / boost::math::constants::pi<double>()) * (q_max - z_quantile(delta / 2.0) / root_n);
  return form == ThresholdForm::statement ? numer / L : numer / std::sqrt(L);
}

double OptimismCheckConfig::sigma() const { return std::sqrt(delta * (1.0 - delta) / trials); }

void OptimismCheckConfig::validate() const {
  if (n < 1 || k < 1 || trials < 1) throw InvalidParameter("optimism check: n, k and trials must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidParameter("optimism check: delta must lie in (0, 1)");
  if (!(3.0 * sigma() < delta / 2.0)) throw InvalidParameter("optimism check: too few trials for delta");
}

std::vector<double> optimism_mc(const OptimismCheckConfig& cfg, std::span<const double> cs) {
  cfg.validate();
  constexpr long kChunk = 10000;
  const int n = cfg.n;
  const double sd = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<long> hits(cs.size(), 0);
  std::vector<double> x(n);
  boost::random::normal_distribution<double> gauss(0.0, 1.0);

  for (long first = 0, chunk = 0; first < cfg.trials; first += kChunk, ++chunk) {
    Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(chunk), static_cast<std::uint64_t>(Stream::verify)));
    const long count = std::min(kChunk, cfg.trials - first);
    for (long t = 0; t < count; ++t) {
      double norm2 = 0.0;
      for (double& v : x) {
        v = gauss(rng);
        norm2 += v * v;
      }
      const double inv = 1.0 / std::sqrt(norm2);
      auto dot = [&] {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += gauss(rng) * x[j];
        return s * sd * inv;
      };
      const double q = dot();
      double bonus = 0.0;
      for (int i = 0; i < cfg.k; ++i) {
        const double target = dot();
        const double predictor = dot();
        bonus = std::max(bonus, std::abs(predictor - target));
      }
      for (std::size_t j = 0; j < cs.size(); ++j) {
        if (q + std::max(cs[j], 0.0) * bonus > cfg.q_max) ++hits[j];
      }
    }
  }
  std::vector<double> rates(cs.size());
  for (std::size_t j = 0; j < cs.size(); ++j) rates[j] = static_cast<double>(hits[j]) / cfg.trials;
  return rates;
}

double optimism_mc(const OptimismCheckConfig& cfg, double c) {
  const double cs[1] = {c};
  return optimism_mc(cfg, cs)[0];
}

}  // namespace vbe::verify
