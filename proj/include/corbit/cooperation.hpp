#pragma once

#include <vector>

#include "corbit/ellipse.hpp"
#include "corbit/packet.hpp"

namespace corbit {

/// Latest received per-agent values; entry i-1 belongs to agent i. The own
/// entry is maintained locally by coop_step.
struct PeerTable {
  explicit PeerTable(int agent_count)
      : s_a_arr(agent_count, 0.0),
        fl_r_arr(agent_count, 0),
        fl_h_arr(agent_count, 0),
        fl_o_arr(agent_count, 0) {}

  int agent_count() const { return static_cast<int>(s_a_arr.size()); }

  void apply(const AgentPacket& packet) {
    const int i = packet.agent_index - 1;
    s_a_arr[i] = packet.s_a;
    fl_r_arr[i] = packet.fl_r;
    fl_h_arr[i] = packet.fl_h;
    fl_o_arr[i] = packet.fl_o;
  }

  std::vector<double> s_a_arr;
  std::vector<std::uint8_t> fl_r_arr;
  std::vector<std::uint8_t> fl_h_arr;
  std::vector<std::uint8_t> fl_o_arr;
};

/// Per-agent protocol state. Flags are monotone: once set they stay set for
/// the rest of the mission.
struct CoopState {
  int my_index = 1;      // 1..N_A
  int agent_count = 1;   // N_A
  bool fl_r = false;
  bool fl_h = false;
  bool fl_o = false;
  double gamma_th = 0.1;
  double d_th = 0.1;
  double k_s = 0.5;      // correction gain (1/s)
  double delta_s = 0.0;  // desired separation 2*pi/N_A
};

CoopState make_coop_state(int my_index, int agent_count, double gamma_th, double d_th,
                          double k_s);

/// Index of the next agent ahead along the direction of motion (smallest
/// positive wrapped distance in s; s already folds in d_c). Agents sharing
/// the same parameter resolve so the smaller index points at the larger.
/// With a single agent, returns my_index.
int find_neighbour(const PeerTable& table, int my_index, double my_s);

/// D_s = normalize(normalize(neighbour_s - my_s) - delta_s), in [-pi, pi].
double separation_error(double my_s, double neighbour_s, double delta_s);

/// Correction speed V_C = G(s_A) sqrt(gamma_A) k_s D_s.
double correction_speed(double d_s, const OrbitCoords& coords, const EllipseAxes& axes,
                        double k_s);

struct CoopStepResult {
  double v_c = 0.0;
  double d_s = 0.0;
  int neighbour_index = 0;
  AgentPacket packet;
};

/// One protocol step: refresh the own table row, find the neighbour, update
/// the fl_o / fl_r / fl_h flags, and emit the correction speed. Agent 1
/// holds V_C = 0 until its neighbour reports ready, then joins the
/// correction law and raises fl_h (leader handoff). Returns the packet to
/// broadcast.
CoopStepResult coop_step(CoopState& state, PeerTable& table, const OrbitCoords& coords,
                         const EllipseAxes& axes);

}  // namespace corbit
