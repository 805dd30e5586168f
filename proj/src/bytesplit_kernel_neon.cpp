// Native backend for the bytesplit kernel, built on the Aarch64 LD2/ST2
// deinterleaving loads and stores. NEON is mandatory on Aarch64, so no
// runtime probing beyond the architecture check is needed.

#include "utf16mend/bytesplit_kernel.hpp"

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>

#include "utf16mend/surrogate.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace utf16mend::detail {

bool neon_bytesplit_available() { return true; }

namespace {

// Little-endian UTF-16: LD2 puts the low bytes in plane 0 and the high bytes
// in plane 1. Only the high bytes matter for classification.
inline uint8x16_t segment_mismatch_copy(char16_t* out, const char16_t* in) {
  const uint8x16x2_t lookback = vld2q_u8(reinterpret_cast<const std::uint8_t*>(in - 1));
  const uint8x16x2_t block = vld2q_u8(reinterpret_cast<const std::uint8_t*>(in));

  const uint8x16_t range_tag = vdupq_n_u8(0xFC);
  const uint8x16_t lb_is_high =
      vceqq_u8(vandq_u8(lookback.val[1], range_tag), vdupq_n_u8(0xD8));
  const uint8x16_t block_is_low =
      vceqq_u8(vandq_u8(block.val[1], range_tag), vdupq_n_u8(0xDC));
  const uint8x16_t mismatch = veorq_u8(lb_is_high, block_is_low);

  vst2q_u8(reinterpret_cast<std::uint8_t*>(out), block);
  return mismatch;
}

inline bool vec_nonzero(uint8x16_t v) {
  return vmaxvq_u32(vreinterpretq_u32_u8(v)) != 0;
}

inline std::uint64_t masks_to_bitset(uint8x16_t m0, uint8x16_t m1, uint8x16_t m2,
                                     uint8x16_t m3) {
  alignas(16) static constexpr std::uint8_t lane_bits[16] = {
      0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80,
      0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80,
  };
  const uint8x16_t bit_mask = vld1q_u8(lane_bits);
  uint8x16_t sum0 = vpaddq_u8(vandq_u8(m0, bit_mask), vandq_u8(m1, bit_mask));
  const uint8x16_t sum1 = vpaddq_u8(vandq_u8(m2, bit_mask), vandq_u8(m3, bit_mask));
  sum0 = vpaddq_u8(sum0, sum1);
  sum0 = vpaddq_u8(sum0, sum0);
  return vgetq_lane_u64(vreinterpretq_u64_u8(sum0), 0);
}

inline void apply_bitset_fixups(char16_t* out, const char16_t* in, std::uint64_t bits) {
  while (bits != 0) {
    const int j = std::countr_zero(bits);  // signed: j == 0 fixes up out[-1]
    bits &= bits - 1;
    if (is_low_surrogate(in[j]))
      out[j] = replacement_character;
    else
      out[j - 1] = replacement_character;
  }
}

inline bool fix_superblock64_neon(char16_t* out, const char16_t* in) {
  const uint8x16_t m0 = segment_mismatch_copy(out, in);
  const uint8x16_t m1 = segment_mismatch_copy(out + 16, in + 16);
  const uint8x16_t m2 = segment_mismatch_copy(out + 32, in + 32);
  const uint8x16_t m3 = segment_mismatch_copy(out + 48, in + 48);

  if (!vec_nonzero(vorrq_u8(vorrq_u8(m0, m1), vorrq_u8(m2, m3)))) return true;
  apply_bitset_fixups(out, in, masks_to_bitset(m0, m1, m2, m3));
  return false;
}

inline void fix_block16_neon(char16_t* out, const char16_t* in) {
  const uint8x16_t mask = segment_mismatch_copy(out, in);
  if (!vec_nonzero(mask)) return;
  const uint8x16_t zero = vdupq_n_u8(0);
  apply_bitset_fixups(out, in, masks_to_bitset(mask, zero, zero, zero) & 0xFFFF);
}

}  // namespace

void fix_stream_bytesplit_neon(char16_t* out, const char16_t* in, std::size_t n) {
  constexpr std::size_t S = bytesplit_segment_units;
  constexpr std::size_t SB = bytesplit_superblock_units;
  if (n < S + 1) {
    fix_scalar(out, in, n);
    return;
  }

  if (out == in) {
    if (is_low_surrogate(in[0])) out[0] = replacement_character;
  } else {
    out[0] = is_low_surrogate(in[0]) ? replacement_character : in[0];
  }

  std::size_t i = 1;
  for (; i + SB <= n; i += SB) fix_superblock64_neon(out + i, in + i);
  for (; i + S <= n; i += S) fix_block16_neon(out + i, in + i);
  fix_block16_neon(out + n - S, in + n - S);

  if (out == in) {
    if (is_high_surrogate(out[n - 1])) out[n - 1] = replacement_character;
  } else {
    out[n - 1] = is_high_surrogate(out[n - 1]) ? replacement_character : out[n - 1];
  }
}

}  // namespace utf16mend::detail

#else  // !__aarch64__

namespace utf16mend::detail {

bool neon_bytesplit_available() { return false; }

void fix_stream_bytesplit_neon(char16_t*, const char16_t*, std::size_t) {
  assert(!"native bytesplit backend not compiled for this target");
}

}  // namespace utf16mend::detail

#endif
