#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rigicount {

struct MRule {
  enum class Kind { fixed, hitting, hitting_offset };
  Kind kind = Kind::hitting;
  std::int64_t value = 0;  // M for fixed, offset for hitting_offset
};

// Accepts "fixed:M", "hitting" and "hitting+K".
MRule parse_m_rule(const std::string& s);
std::string to_string(const MRule& rule);

struct ExperimentConfig {
  std::vector<int> ns{50};
  int d = 2;
  int samples = 10;
  std::uint64_t seed = 1;
  MRule m_rule;
  std::string output;  // empty: caller's stream
  int threads = 1;
  bool timing = false;  // wall times make the CSV non-reproducible
};

// RIGICOUNT_SEED when set and numeric, else 1.
std::uint64_t default_seed();

// key=value lines, '#' comments. Keys: n (comma list), d, samples, seed,
// m_rule, output, threads, timing. Unknown keys are errors.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);
std::string serialize_config(const ExperimentConfig& cfg);

struct ExperimentRow {
  int sample = 0;
  int n = 0;
  std::int64_t m = 0;
  int d = 0;
  int core_d1 = 0;   // |(d+1)-core|
  int core_k = 0;    // |d(d+1)-core|
  std::string exponent;  // "NA" unless certified
  std::string status;    // certificate status or "error"
  std::vector<std::string> flags;  // per evidence check: 1, 0 or -
  std::string wall_ms;
  std::string error;
};

struct AggregateRow {
  int n = 0;
  int samples = 0;
  int certified = 0;
  int deterministic = 0;
  int randomized = 0;
  int refuted = 0;
  int inconclusive = 0;
  int errors = 0;
  double fraction() const { return samples == 0 ? 0.0 : static_cast<double>(certified) / samples; }
};

struct ExperimentResult {
  std::vector<ExperimentRow> rows;
  std::vector<AggregateRow> aggregates;
};

// Evidence flags reported per row, in CSV column order.
const std::vector<std::string>& experiment_flag_names();

// Sample i (0-based across the whole sweep) uses seed cfg.seed + i. Rows are
// ordered by sample index whatever the thread count.
ExperimentResult run_experiment(const ExperimentConfig& cfg);
void write_csv(std::ostream& out, const ExperimentConfig& cfg, const ExperimentResult& result);

}  // namespace rigicount
