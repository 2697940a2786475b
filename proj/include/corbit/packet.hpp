#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

namespace corbit {

/// Broadcast coordination message: agent index, ellipse parameter and the
/// three monotone protocol flags.
struct AgentPacket {
  int agent_index = 0;  // 1..N_A
  double s_a = 0.0;     // wrapped to [0, 2pi)
  bool fl_r = false;    // ready
  bool fl_h = false;    // formation height
  bool fl_o = false;    // on-orbit
};

/// Wire frame: u8 index | f64 s_a little-endian | u8 flag bits
/// (bit0 = fl_r, bit1 = fl_h, bit2 = fl_o) | u32 CRC-32 little-endian.
inline constexpr std::size_t kPacketFrameSize = 14;
using PacketFrame = std::array<std::uint8_t, kPacketFrameSize>;

std::uint32_t frame_checksum(std::span<const std::uint8_t> payload);

PacketFrame encode_packet(const AgentPacket& packet);

/// Decode a wire frame. Returns nullopt on wrong length, checksum mismatch,
/// index outside 1..agent_count, or s_a outside [0, 2pi).
std::optional<AgentPacket> decode_packet(std::span<const std::uint8_t> frame, int agent_count);

}  // namespace corbit
