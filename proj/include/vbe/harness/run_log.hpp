#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace vbe::harness {

struct RunRecord {
  int run = 0;
  std::uint64_t seed = 0;
  long step = 0;
  long episode = 0;
  double metric = 0.0;
  long coverage = 0;

  bool operator==(const RunRecord&) const = default;
};

/// Append-only table of records, kept sorted by (run, step).
class RunLog {
 public:
  /// Throws ContractViolation when the record would break the ordering.
  void append(const RunRecord& r);
  /// Appends every record of `other`; its runs must come after ours.
  void extend(const RunLog& other);

  const std::vector<RunRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  /// Records belonging to one run, in order.
  std::vector<RunRecord> run(int id) const;

 private:
  std::vector<RunRecord> records_;
};

inline constexpr const char* kCsvHeader = "run,seed,step,episode,metric,coverage";

/// Header plus one line per record; reals printed with 6 significant digits.
void write_csv(const RunLog& log, std::ostream& out);
void write_csv(const RunLog& log, const std::filesystem::path& path);
std::string to_csv(const RunLog& log);

RunLog read_csv(std::istream& in);
RunLog read_csv(const std::filesystem::path& path);

}  // namespace vbe::harness
