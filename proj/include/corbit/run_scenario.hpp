#pragma once

#include <filesystem>

#include "corbit/metrics.hpp"
#include "corbit/scenario.hpp"

namespace corbit {

struct RunOutput {
  RunSummary summary;
  std::filesystem::path metrics_csv;
  std::filesystem::path summary_txt;
  std::filesystem::path metrics_jsonl;  // empty unless requested
};

/// Execute a scenario and persist the metrics CSV plus the run summary.
RunOutput run_scenario(const ScenarioConfig& cfg, const std::filesystem::path& out_dir,
                       bool jsonl_mirror = false);

}  // namespace corbit
