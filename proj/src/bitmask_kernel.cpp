#include "utf16mend/bitmask_kernel.hpp"

#include <bit>
#include <cassert>
#include <cstring>
#include <stdexcept>

#include "utf16mend/probe.hpp"
#include "utf16mend/surrogate.hpp"

namespace utf16mend {

bool bitmask_native_supported() {
  return detail::avx512_mask_registers_available();
}

std::pair<std::uint32_t, std::uint32_t> surrogate_masks(const char16_t* lookback,
                                                        const char16_t* block) {
  std::uint32_t lb_is_high = 0;
  std::uint32_t block_is_low = 0;
  for (unsigned i = 0; i < bitmask_lanes; i++) {
    lb_is_high |= static_cast<std::uint32_t>(is_high_surrogate(lookback[i])) << i;
    block_is_low |= static_cast<std::uint32_t>(is_low_surrogate(block[i])) << i;
  }
  return {lb_is_high, block_is_low};
}

void fix_block_bitmask_emulated(char16_t* out, const char16_t* in, bool in_place) {
  const auto [lb_is_high, block_is_low] = surrogate_masks(in - 1, in);
  const std::uint32_t illseq = lb_is_high ^ block_is_low;

  if (illseq == 0) {
    if (!in_place) {
      std::memcpy(out, in, bitmask_lanes * sizeof(char16_t));
      probe::local().stored_units += bitmask_lanes;
    }
    return;
  }

  probe::local().corrected_blocks += 1;
  const std::uint32_t lb_illseq = lb_is_high & ~block_is_low;
  const std::uint32_t block_illseq = (lb_illseq >> 1) | (~lb_is_high & block_is_low);

  // Lone high surrogate in the lookback's first lane: a single-unit masked
  // store into out[-1], which cannot overlap the block store below.
  if (lb_illseq & 1u) {
    out[-1] = replacement_character;
    probe::local().stored_units += 1;
  }

  if (in_place) {
    // Masked store touching only the illegally sequenced lanes.
    std::uint32_t bits = block_illseq;
    probe::local().stored_units += std::popcount(bits);
    while (bits != 0) {
      const unsigned i = std::countr_zero(bits);
      bits &= bits - 1;
      out[i] = replacement_character;
    }
  } else {
    for (unsigned i = 0; i < bitmask_lanes; i++)
      out[i] = (block_illseq >> i) & 1u ? replacement_character : in[i];
    probe::local().stored_units += bitmask_lanes;
  }
}

namespace {

void fix_stream_bitmask_emulated(char16_t* out, const char16_t* in, std::size_t n) {
  constexpr std::size_t W = bitmask_lanes;
  if (n < W + 1) {
    fix_scalar(out, in, n);
    return;
  }

  const bool in_place = out == in;
  if (in_place) {
    if (is_low_surrogate(in[0])) out[0] = replacement_character;
    for (std::size_t i = 1; i + W <= n; i += W)
      fix_block_bitmask_emulated(out + i, in + i, true);
    fix_block_bitmask_emulated(out + n - W, in + n - W, true);
    if (is_high_surrogate(out[n - 1])) out[n - 1] = replacement_character;
  } else {
    out[0] = is_low_surrogate(in[0]) ? replacement_character : in[0];
    for (std::size_t i = 1; i + W <= n; i += W)
      fix_block_bitmask_emulated(out + i, in + i, false);
    fix_block_bitmask_emulated(out + n - W, in + n - W, false);
    out[n - 1] = is_high_surrogate(out[n - 1]) ? replacement_character : out[n - 1];
  }
}

}  // namespace

void fix_stream_bitmask(std::span<const char16_t> in, std::span<char16_t> out,
                        bitmask_backend backend) {
  assert(in.size() == out.size());
  if (backend == bitmask_backend::automatic)
    backend = bitmask_native_supported() ? bitmask_backend::native
                                         : bitmask_backend::emulated;
  switch (backend) {
    case bitmask_backend::native:
      if (!bitmask_native_supported())
        throw std::runtime_error(
            "bitmask kernel: native backend requires AVX-512F/BW mask registers");
      detail::fix_stream_bitmask_avx512(out.data(), in.data(), in.size());
      break;
    case bitmask_backend::emulated:
      fix_stream_bitmask_emulated(out.data(), in.data(), in.size());
      break;
    case bitmask_backend::automatic:
      break;  // unreachable
  }
}

}  // namespace utf16mend
