#pragma once

#include <cstdint>
#include <span>
#include <utility>

namespace utf16mend {

// Wide-block kernel: 32 lanes per block, lane predicates held as one bit per
// lane in a 32-bit mask instead of whole boolean lanes. On x86-64 processors
// with 512-bit vectors and mask registers the native backend compiles to
// mask-register instructions; everywhere else a bit-exact emulation runs the
// same mask algebra in scalar code.

enum class bitmask_backend { automatic, emulated, native };

inline constexpr unsigned bitmask_lanes = 32;

bool bitmask_native_supported();

/// Per-lane surrogate predicates as bit masks: bit i of `first` is set iff
/// lookback[i] is a high surrogate, bit i of `second` iff block[i] is a low
/// surrogate. Both pointers address 32 readable units.
std::pair<std::uint32_t, std::uint32_t> surrogate_masks(const char16_t* lookback,
                                                        const char16_t* block);

/// Emulated 32-unit block repair; in[-1]/out[-1] must be addressable.
void fix_block_bitmask_emulated(char16_t* out, const char16_t* in, bool in_place);

/// Stream repair; result equals fix_scalar. `automatic` picks the native
/// backend when the host supports it.
void fix_stream_bitmask(std::span<const char16_t> in, std::span<char16_t> out,
                        bitmask_backend backend = bitmask_backend::automatic);

namespace detail {
bool avx512_mask_registers_available();
void fix_stream_bitmask_avx512(char16_t* out, const char16_t* in, std::size_t n);
}  // namespace detail

}  // namespace utf16mend
