#pragma once

#include <cstddef>
#include <cstdint>
#include <cstring>
#include <span>

#include "utf16mend/surrogate.hpp"

namespace utf16mend {

// Blockwise repair over W-unit vectors of 16-bit lanes, with booleans held as
// all-ones/all-zeros lanes. Written as plain lane loops so the compiler can
// map them onto whatever vector unit is available (SSE2, AVX2, NEON); the
// same structure is recast with mask registers in bitmask_kernel and with
// split byte planes in bytesplit_kernel.

/// Repair one W-unit block at `in`, writing to `out`. One unit of lookback
/// must be readable at in[-1] and writable at out[-1]: a high surrogate that
/// ends the previous block is fixed up through that slot.
template <unsigned W>
inline void fix_block_generic(char16_t* out, const char16_t* in, bool in_place) {
  static_assert(W >= 2);
  const char16_t* lookback = in - 1;

  std::uint16_t lb_is_high[W];
  std::uint16_t block_is_low[W];
  for (unsigned i = 0; i < W; i++)
    lb_is_high[i] = (lookback[i] & 0xFC00) == 0xD800 ? 0xFFFF : 0x0000;
  for (unsigned i = 0; i < W; i++)
    block_is_low[i] = (in[i] & 0xFC00) == 0xDC00 ? 0xFFFF : 0x0000;

  // A high surrogate at lookback lane i is correctly followed by a low
  // surrogate exactly when block lane i is low, so the lanewise XOR is zero
  // for well-formed windows.
  std::uint16_t any_illseq = 0;
  for (unsigned i = 0; i < W; i++)
    any_illseq |= static_cast<std::uint16_t>(lb_is_high[i] ^ block_is_low[i]);

  if (any_illseq == 0) {
    if (!in_place) std::memcpy(out, in, W * sizeof(char16_t));
    return;
  }

  // lb_illseq: lone high surrogates, in lookback lanes. Lane i names the
  // unit at in[i - 1], so shifting one lane toward index 0 re-expresses it
  // in block lanes; lane 0 falls off the front and lands at out[-1].
  std::uint16_t lb_illseq[W];
  for (unsigned i = 0; i < W; i++)
    lb_illseq[i] = static_cast<std::uint16_t>(lb_is_high[i] & ~block_is_low[i]);

  std::uint16_t block_illseq[W];
  for (unsigned i = 0; i + 1 < W; i++)
    block_illseq[i] =
        static_cast<std::uint16_t>(lb_illseq[i + 1] | (~lb_is_high[i] & block_is_low[i]));
  block_illseq[W - 1] =
      static_cast<std::uint16_t>(~lb_is_high[W - 1] & block_is_low[W - 1]);

  if (lb_illseq[0] != 0) out[-1] = replacement_character;
  for (unsigned i = 0; i < W; i++)
    out[i] = static_cast<char16_t>((in[i] & ~block_illseq[i]) |
                                   (replacement_character & block_illseq[i]));
}

/// Repair a whole stream with W-unit blocks. Equivalent to fix_scalar on
/// every input; `out` must equal `in` exactly or not overlap it at all.
template <unsigned W>
void fix_stream_generic_w(char16_t* out, const char16_t* in, std::size_t n) {
  if (n < W + 1) {
    // Too short for even one block with lookback.
    fix_scalar(out, in, n);
    return;
  }

  out[0] = is_low_surrogate(in[0]) ? replacement_character : in[0];

  // Duplicated loops let the compiler specialise fix_block_generic per mode.
  std::size_t i;
  if (out == in) {
    for (i = 1; i + W <= n; i += W) fix_block_generic<W>(out + i, in + i, true);
    fix_block_generic<W>(out + n - W, in + n - W, true);
  } else {
    for (i = 1; i + W <= n; i += W) fix_block_generic<W>(out + i, in + i, false);
    fix_block_generic<W>(out + n - W, in + n - W, false);
  }
  // The tail block is aligned to the end of the input and may overlap the
  // previous iteration; reprocessing already-repaired units is safe because
  // the transformation is idempotent.

  out[n - 1] = is_high_surrogate(out[n - 1]) ? replacement_character : out[n - 1];
}

/// Lane counts accepted by the runtime-dispatched entry points.
constexpr bool generic_lanes_supported(unsigned lanes) {
  return lanes == 4 || lanes == 8 || lanes == 16 || lanes == 32;
}

void fix_block_generic(char16_t* out, const char16_t* in, unsigned lanes, bool in_place);
void fix_stream_generic(std::span<const char16_t> in, std::span<char16_t> out,
                        unsigned lanes = 8);

}  // namespace utf16mend
