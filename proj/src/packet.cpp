#include "corbit/packet.hpp"

#include <bit>
#include <cmath>

#include "corbit/angles.hpp"

namespace corbit {
namespace {

std::uint32_t crc32_table_entry(std::uint32_t i) {
  std::uint32_t c = i;
  for (int k = 0; k < 8; ++k) c = (c & 1u) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
  return c;
}

const std::array<std::uint32_t, 256>& crc32_table() {
  static const auto table = [] {
    std::array<std::uint32_t, 256> t{};
    for (std::uint32_t i = 0; i < 256; ++i) t[i] = crc32_table_entry(i);
    return t;
  }();
  return table;
}

void put_u32_le(std::uint32_t v, std::uint8_t* out) {
  out[0] = static_cast<std::uint8_t>(v);
  out[1] = static_cast<std::uint8_t>(v >> 8);
  out[2] = static_cast<std::uint8_t>(v >> 16);
  out[3] = static_cast<std::uint8_t>(v >> 24);
}

std::uint32_t get_u32_le(const std::uint8_t* in) {
  return static_cast<std::uint32_t>(in[0]) | static_cast<std::uint32_t>(in[1]) << 8 |
         static_cast<std::uint32_t>(in[2]) << 16 | static_cast<std::uint32_t>(in[3]) << 24;
}

}  // namespace

std::uint32_t frame_checksum(std::span<const std::uint8_t> payload) {
  std::uint32_t c = 0xFFFFFFFFu;
  for (std::uint8_t byte : payload) c = crc32_table()[(c ^ byte) & 0xFFu] ^ (c >> 8);
  return c ^ 0xFFFFFFFFu;
}

PacketFrame encode_packet(const AgentPacket& packet) {
  PacketFrame frame{};
  frame[0] = static_cast<std::uint8_t>(packet.agent_index);
  const auto bits = std::bit_cast<std::uint64_t>(packet.s_a);
  for (int i = 0; i < 8; ++i) frame[1 + i] = static_cast<std::uint8_t>(bits >> (8 * i));
  frame[9] = static_cast<std::uint8_t>((packet.fl_r ? 1u : 0u) | (packet.fl_h ? 2u : 0u) |
                                       (packet.fl_o ? 4u : 0u));
  put_u32_le(frame_checksum(std::span(frame.data(), 10)), frame.data() + 10);
  return frame;
}

std::optional<AgentPacket> decode_packet(std::span<const std::uint8_t> frame, int agent_count) {
  if (frame.size() != kPacketFrameSize) return std::nullopt;
  if (get_u32_le(frame.data() + 10) != frame_checksum(frame.first(10))) return std::nullopt;
  AgentPacket packet;
  packet.agent_index = frame[0];
  if (packet.agent_index < 1 || packet.agent_index > agent_count) return std::nullopt;
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(frame[1 + i]) << (8 * i);
  packet.s_a = std::bit_cast<double>(bits);
  if (!std::isfinite(packet.s_a) || packet.s_a < 0.0 || packet.s_a >= kTwoPi<double>) {
    return std::nullopt;
  }
  const std::uint8_t flags = frame[9];
  if (flags & ~0x07u) return std::nullopt;
  packet.fl_r = flags & 1u;
  packet.fl_h = flags & 2u;
  packet.fl_o = flags & 4u;
  return packet;
}

}  // namespace corbit
