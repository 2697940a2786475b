#include "corbit/run_scenario.hpp"

#include <stdexcept>

#include "corbit/sim.hpp"

namespace corbit {

RunOutput run_scenario(const ScenarioConfig& cfg, const std::filesystem::path& out_dir,
                       bool jsonl_mirror) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + out_dir.string());

  World world(cfg);
  world.run();

  RunOutput out;
  out.summary = world.summary();
  out.metrics_csv = out_dir / (cfg.name + "_metrics.csv");
  out.summary_txt = out_dir / (cfg.name + "_summary.txt");
  write_metrics_csv(out.metrics_csv, world.records());
  write_summary(out.summary_txt, out.summary);
  if (jsonl_mirror) {
    out.metrics_jsonl = out_dir / (cfg.name + "_metrics.jsonl");
    write_metrics_jsonl(out.metrics_jsonl, world.records());
  }
  return out;
}

}  // namespace corbit
