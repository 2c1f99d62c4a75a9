#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace vbe::verify {

struct CheckRow {
  std::string check;
  double statistic = 0.0;
  double threshold = 0.0;
  std::string verdict;  // pass | fail | flag (informational, not a failure)
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int mdp_draws = 100;
  int trajectories = 1000;
  long optimism_trials = 100000;
  int gradient_draws = 100;
  long decay_steps = 100000;
};

std::vector<CheckRow> run_verify(const VerifyOptions& opt = {});

bool all_passed(const std::vector<CheckRow>& rows);

/// CSV with header check,statistic,threshold,verdict, or an aligned table.
void write_report(const std::vector<CheckRow>& rows, std::ostream& out, bool csv);

}  // namespace vbe::verify
