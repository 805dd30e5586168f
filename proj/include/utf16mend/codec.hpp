#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace utf16mend {

// Byte-level UTF-16 I/O: LE/BE unit packing, BOM detection, and the
// truncated-final-byte policy. Repair itself never sees bytes, only units.

enum class endianness : std::uint8_t { little, big };
enum class bom_policy : std::uint8_t { preserve, strip, require };

struct codec_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr char16_t load_unit(const std::uint8_t* p, endianness order) {
  return order == endianness::little
             ? static_cast<char16_t>(p[0] | (p[1] << 8))
             : static_cast<char16_t>((p[0] << 8) | p[1]);
}

constexpr void store_unit(std::uint8_t* p, char16_t unit, endianness order) {
  if (order == endianness::little) {
    p[0] = static_cast<std::uint8_t>(unit & 0xFF);
    p[1] = static_cast<std::uint8_t>(unit >> 8);
  } else {
    p[0] = static_cast<std::uint8_t>(unit >> 8);
    p[1] = static_cast<std::uint8_t>(unit & 0xFF);
  }
}

struct decode_options {
  std::optional<endianness> byte_order;  // nullopt: detect from BOM, else LE
  bool pad_final_byte = false;           // odd trailing byte becomes U+FFFD
};

struct decoded_utf16 {
  std::vector<char16_t> units;  // BOM not included
  endianness byte_order = endianness::little;
  bool had_bom = false;
  bool padded = false;
};

/// Throws codec_error on an odd byte count (unless pad_final_byte is set).
decoded_utf16 decode_utf16_bytes(std::span<const std::uint8_t> bytes,
                                 const decode_options& options = {});

std::vector<std::uint8_t> encode_utf16_bytes(std::span<const char16_t> units,
                                             endianness order, bool with_bom);

}  // namespace utf16mend
