#include "utf16mend/bytesplit_kernel.hpp"

#include <bit>
#include <cassert>
#include <cstring>
#include <stdexcept>

#include "utf16mend/probe.hpp"
#include "utf16mend/surrogate.hpp"

namespace utf16mend {

bool bytesplit_native_supported() { return detail::neon_bytesplit_available(); }

byte_mask16 segment_mismatch(char16_t* out, const char16_t* in) {
  constexpr unsigned S = bytesplit_segment_units;
  const char16_t* lookback = in - 1;

  byte_mask16 mismatch;
  for (unsigned i = 0; i < S; i++) {
    const std::uint8_t lb_hi = static_cast<std::uint8_t>(lookback[i] >> 8) & 0xFC;
    const std::uint8_t blk_hi = static_cast<std::uint8_t>(in[i] >> 8) & 0xFC;
    const std::uint8_t lb_is_high = lb_hi == 0xD8 ? 0xFF : 0x00;
    const std::uint8_t blk_is_low = blk_hi == 0xDC ? 0xFF : 0x00;
    mismatch[i] = lb_is_high ^ blk_is_low;
  }

  if (out != in) {
    std::memcpy(out, in, S * sizeof(char16_t));
    probe::local().stored_units += S;
  }
  return mismatch;
}

bool any_nonzero(const byte_mask16& mask) {
  std::uint8_t max = 0;
  for (const std::uint8_t lane : mask) max = lane > max ? lane : max;
  return max != 0;
}

std::uint64_t masks_to_bitset(const byte_mask16& m0, const byte_mask16& m1,
                              const byte_mask16& m2, const byte_mask16& m3) {
  const byte_mask16* masks[4] = {&m0, &m1, &m2, &m3};
  std::uint64_t bits = 0;
  for (unsigned k = 0; k < 4; k++)
    for (unsigned i = 0; i < bytesplit_segment_units; i++)
      if ((*masks[k])[i] != 0) bits |= std::uint64_t{1} << (16 * k + i);
  return bits;
}

namespace {

// The bitset indexes lookback-relative lanes: bit j fires for the pair of
// units (in[j-1], in[j]). A fired low surrogate sits at j itself; otherwise
// the offender is the high surrogate one unit earlier.
void apply_bitset_fixups(char16_t* out, const char16_t* in, std::uint64_t bits) {
  while (bits != 0) {
    const int j = std::countr_zero(bits);  // signed: j == 0 fixes up out[-1]
    bits &= bits - 1;
    if (is_low_surrogate(in[j]))
      out[j] = replacement_character;
    else
      out[j - 1] = replacement_character;
  }
}

}  // namespace

bool fix_superblock64(char16_t* out, const char16_t* in) {
  constexpr unsigned S = bytesplit_segment_units;
  const byte_mask16 m0 = segment_mismatch(out, in);
  const byte_mask16 m1 = segment_mismatch(out + S, in + S);
  const byte_mask16 m2 = segment_mismatch(out + 2 * S, in + 2 * S);
  const byte_mask16 m3 = segment_mismatch(out + 3 * S, in + 3 * S);

  byte_mask16 combined;
  for (unsigned i = 0; i < S; i++) combined[i] = m0[i] | m1[i] | m2[i] | m3[i];
  if (!any_nonzero(combined)) return true;

  probe::local().corrected_blocks += 1;
  apply_bitset_fixups(out, in, masks_to_bitset(m0, m1, m2, m3));
  return false;
}

void fix_block_bytesplit16(char16_t* out, const char16_t* in) {
  const byte_mask16 mask = segment_mismatch(out, in);
  if (!any_nonzero(mask)) return;

  probe::local().corrected_blocks += 1;
  std::uint64_t bits = 0;
  for (unsigned i = 0; i < bytesplit_segment_units; i++)
    if (mask[i] != 0) bits |= std::uint64_t{1} << i;
  apply_bitset_fixups(out, in, bits);
}

namespace {

void fix_stream_bytesplit_emulated(char16_t* out, const char16_t* in, std::size_t n) {
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
  for (; i + SB <= n; i += SB) fix_superblock64(out + i, in + i);
  for (; i + S <= n; i += S) fix_block_bytesplit16(out + i, in + i);
  fix_block_bytesplit16(out + n - S, in + n - S);

  if (out == in) {
    if (is_high_surrogate(out[n - 1])) out[n - 1] = replacement_character;
  } else {
    out[n - 1] = is_high_surrogate(out[n - 1]) ? replacement_character : out[n - 1];
  }
}

}  // namespace

void fix_stream_bytesplit(std::span<const char16_t> in, std::span<char16_t> out,
                          bytesplit_backend backend) {
  assert(in.size() == out.size());
  if (backend == bytesplit_backend::automatic)
    backend = bytesplit_native_supported() ? bytesplit_backend::native
                                           : bytesplit_backend::emulated;
  switch (backend) {
    case bytesplit_backend::native:
      if (!bytesplit_native_supported())
        throw std::runtime_error(
            "bytesplit kernel: native backend requires NEON deinterleaving loads");
      detail::fix_stream_bytesplit_neon(out.data(), in.data(), in.size());
      break;
    case bytesplit_backend::emulated:
      fix_stream_bytesplit_emulated(out.data(), in.data(), in.size());
      break;
    case bytesplit_backend::automatic:
      break;  // unreachable
  }
}

}  // namespace utf16mend
