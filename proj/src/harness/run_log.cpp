#include "vbe/harness/run_log.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <boost/algorithm/string.hpp>
#include <boost/lexical_cast.hpp>

#include "vbe/common/errors.hpp"

namespace vbe::harness {

void RunLog::append(const RunRecord& r) {
  if (!records_.empty()) {
    const RunRecord& last = records_.back();
    if (r.run < last.run || (r.run == last.run && r.step < last.step)) {
      throw ContractViolation("run log records must be sorted by (run, step)");
    }
  }
  records_.push_back(r);
}

void RunLog::extend(const RunLog& other) {
  for (const auto& r : other.records_) append(r);
}

std::vector<RunRecord> RunLog::run(int id) const {
  std::vector<RunRecord> out;
  for (const auto& r : records_) {
    if (r.run == id) out.push_back(r);
  }
  return out;
}

void write_csv(const RunLog& log, std::ostream& out) {
  out << kCsvHeader << '\n';
  char buf[64];
  for (const auto& r : log.records()) {
    std::snprintf(buf, sizeof buf, "%.6g", r.metric);
    out << r.run << ',' << r.seed << ',' << r.step << ',' << r.episode << ',' << buf << ',' << r.coverage << '\n';
  }
}

void write_csv(const RunLog& log, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  write_csv(log, out);
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

std::string to_csv(const RunLog& log) {
  std::ostringstream o;
  write_csv(log, o);
  return o.str();
}

RunLog read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || boost::trim_copy(line) != kCsvHeader) {
    throw IoError("run log: missing or unexpected header");
  }
  RunLog log;
  std::vector<std::string> f;
  while (std::getline(in, line)) {
    boost::trim(line);
    if (line.empty()) continue;
    boost::split(f, line, boost::is_any_of(","));
    if (f.size() != 6) throw IoError("run log: expected 6 fields in '" + line + "'");
    try {
      log.append(RunRecord{boost::lexical_cast<int>(f[0]), boost::lexical_cast<std::uint64_t>(f[1]),
                           boost::lexical_cast<long>(f[2]), boost::lexical_cast<long>(f[3]),
                           boost::lexical_cast<double>(f[4]), boost::lexical_cast<long>(f[5])});
    } catch (const boost::bad_lexical_cast&) {
      throw IoError("run log: bad field in '" + line + "'");
    }
  }
  return log;
}

RunLog read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  return read_csv(in);
}

}  // namespace vbe::harness
