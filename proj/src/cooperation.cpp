#include "corbit/cooperation.hpp"

#include <cmath>
#include <stdexcept>

#include "corbit/angles.hpp"

namespace corbit {

CoopState make_coop_state(int my_index, int agent_count, double gamma_th, double d_th,
                          double k_s) {
  if (agent_count < 1) throw std::invalid_argument("make_coop_state: agent_count must be >= 1");
  if (my_index < 1 || my_index > agent_count) {
    throw std::invalid_argument("make_coop_state: my_index out of range");
  }
  CoopState st;
  st.my_index = my_index;
  st.agent_count = agent_count;
  st.gamma_th = gamma_th;
  st.d_th = d_th;
  st.k_s = k_s;
  st.delta_s = kTwoPi<double> / agent_count;
  return st;
}

int find_neighbour(const PeerTable& table, int my_index, double my_s) {
  const int n = table.agent_count();
  if (n == 1) return my_index;
  int best = 0;
  double best_dist = 0.0;
  for (int j = 1; j <= n; ++j) {
    if (j == my_index) continue;
    double dist = wrap_two_pi(table.s_a_arr[j - 1] - my_s);
    // ties in s resolve so the smaller index follows the larger one
    if (dist == 0.0 && j < my_index) dist = kTwoPi<double>;
    if (best == 0 || dist < best_dist) {
      best = j;
      best_dist = dist;
    }
  }
  return best;
}

double separation_error(double my_s, double neighbour_s, double delta_s) {
  return normalize_angle(normalize_angle(neighbour_s - my_s) - delta_s);
}

double correction_speed(double d_s, const OrbitCoords& coords, const EllipseAxes& axes,
                        double k_s) {
  const double sn = std::sin(coords.s_a);
  const double cs = std::cos(coords.s_a);
  const double radical =
      std::sqrt(coords.gamma_a * (axes.a * axes.a * sn * sn + axes.b * axes.b * cs * cs));
  return radical * k_s * d_s;
}

CoopStepResult coop_step(CoopState& state, PeerTable& table, const OrbitCoords& coords,
                         const EllipseAxes& axes) {
  const int me = state.my_index;
  // own row carries the current parameter and last tick's flags, like a
  // packet received from ourselves
  table.s_a_arr[me - 1] = coords.s_a;
  table.fl_r_arr[me - 1] = state.fl_r;
  table.fl_h_arr[me - 1] = state.fl_h;
  table.fl_o_arr[me - 1] = state.fl_o;

  CoopStepResult out;
  out.neighbour_index = find_neighbour(table, me, coords.s_a);
  const double neighbour_s = table.s_a_arr[out.neighbour_index - 1];
  const bool neighbour_r = table.fl_r_arr[out.neighbour_index - 1];
  const bool neighbour_h = table.fl_h_arr[out.neighbour_index - 1];
  const bool neighbour_o = table.fl_o_arr[out.neighbour_index - 1];
  out.d_s = separation_error(coords.s_a, neighbour_s, state.delta_s);

  if (std::abs(coords.gamma_a - 1.0) < state.gamma_th) state.fl_o = true;

  if (state.fl_o && neighbour_o) {
    // ready either directly behind the leader or behind an already-ready
    // neighbour, in both cases only once the separation error is small
    if ((out.neighbour_index == 1 || neighbour_r) && std::abs(out.d_s) < state.d_th) {
      state.fl_r = true;
    }
    if (neighbour_h) state.fl_h = true;
    if (me == 1) {
      if (neighbour_r) {
        out.v_c = correction_speed(out.d_s, coords, axes, state.k_s);
        state.fl_h = true;  // leader handoff: no leader from here on
      }
    } else {
      out.v_c = correction_speed(out.d_s, coords, axes, state.k_s);
    }
  }

  table.fl_r_arr[me - 1] = state.fl_r;
  table.fl_h_arr[me - 1] = state.fl_h;
  table.fl_o_arr[me - 1] = state.fl_o;
  out.packet = AgentPacket{me, coords.s_a, state.fl_r, state.fl_h, state.fl_o};
  return out;
}

}  // namespace corbit
