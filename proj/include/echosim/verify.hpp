#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "echosim/config.hpp"

namespace echosim {

struct VerifyEntry {
  TransformKind kind;
  std::string waveform;
  double max_abs_dev = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Drift of one legacy bracket grouping from the pipeline emission time.
struct BracketProbeSummary {
  std::string name;
  bool evaluable = false;
  double max_dev_seconds = 0.0;
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;
  std::vector<BracketProbeSummary> probes;
  bool all_pass() const;
};

// Samples received_pipeline and received_closed at n_points random
// in-support observation times for every full transformation and waveform
// family, and records the constant-set diagnostics for the report.
VerifyReport run_verify(const ScenarioConfig& cfg, std::size_t n_points = 4096,
                        double tolerance = 1e-6, std::uint64_t sample_seed = 7);

void print_verify_report(std::ostream& os, const VerifyReport& report);

}  // namespace echosim
