#pragma once

#include <vector>

#include "corbit/convoy.hpp"
#include "corbit/cooperation.hpp"
#include "corbit/metrics.hpp"
#include "corbit/orbit_planner.hpp"
#include "corbit/scenario.hpp"
#include "corbit/speed_control.hpp"
#include "corbit/unicycle.hpp"

namespace corbit {

/// Deterministic discrete-time world. Each tick runs, in order: convoy
/// positions, orbit planning, bus delivery of last tick's packets, per-agent
/// command computation (guidance, cooperation, speed), state integration,
/// metrics capture. Agents read only the shared orbit and the previous
/// tick's bus contents and write only their own state, so the per-agent
/// phase could run in parallel; the driver here steps them sequentially in
/// index order for reproducibility.
class World {
 public:
  explicit World(const ScenarioConfig& cfg);

  void tick();
  void run();  // duration / dt ticks

  long tick_count() const { return tick_count_; }
  double time() const { return static_cast<double>(tick_count_) * cfg_.dt; }
  const ScenarioConfig& config() const { return cfg_; }
  const SpeedEnvelope& envelope() const { return env_; }
  const OrbitSpec& orbit() const { return orbit_; }
  const Convoy& convoy() const { return convoy_; }
  const std::vector<AgentState>& agents() const { return agents_; }
  const std::vector<CoopState>& coop_states() const { return coop_; }
  const std::vector<MetricsRecord>& records() const { return records_; }
  const std::vector<FlagsRecord>& flag_records() const { return flags_; }
  RunSummary summary() const;

 private:
  ScenarioConfig cfg_;
  SpeedEnvelope env_;
  Convoy convoy_;
  OrbitPlanner planner_;
  std::vector<AgentState> agents_;
  std::vector<CoopState> coop_;
  std::vector<PeerTable> tables_;
  std::vector<PacketFrame> bus_;  // frames broadcast last tick
  OrbitSpec orbit_;
  long tick_count_ = 0;
  std::vector<MetricsRecord> records_;
  std::vector<FlagsRecord> flags_;
};

}  // namespace corbit
