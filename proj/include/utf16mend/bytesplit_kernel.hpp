#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace utf16mend {

// Byte-split kernel: UTF-16 units are deinterleaved into byte planes and only
// the high bytes are classified, masked with 0xFC so 0xD8/0xDC tag the two
// surrogate ranges. Work proceeds in 64-unit superblocks of four 16-unit
// segments sharing one combined validity check; rare corrections go through a
// 64-bit bitset walked by trailing-zero counts. The native backend uses the
// Aarch64 deinterleaving loads; the emulated backend is bit-exact scalar code.

enum class bytesplit_backend { automatic, emulated, native };

inline constexpr unsigned bytesplit_segment_units = 16;
inline constexpr unsigned bytesplit_superblock_units = 64;

/// One byte lane per code unit; 0xFF marks a fired predicate.
using byte_mask16 = std::array<std::uint8_t, 16>;

bool bytesplit_native_supported();

/// Classify one 16-unit segment against its lookback and copy the segment's
/// units to the output unchanged; fired lanes mark an XOR mismatch between
/// "lookback unit is high" and "segment unit is low". in[-1] must be readable.
byte_mask16 segment_mismatch(char16_t* out, const char16_t* in);

/// True iff any lane is nonzero (horizontal-maximum test on hardware).
bool any_nonzero(const byte_mask16& mask);

/// Pack four segment masks into one bitset: bit 16*k + i is set iff lane i of
/// mask k fired.
std::uint64_t masks_to_bitset(const byte_mask16& m0, const byte_mask16& m1,
                              const byte_mask16& m2, const byte_mask16& m3);

/// Repair 64 units; returns true when the superblock was valid and copied
/// unchanged, false when corrections were made.
bool fix_superblock64(char16_t* out, const char16_t* in);

/// 16-unit block used between superblocks and for the end-aligned tail.
void fix_block_bytesplit16(char16_t* out, const char16_t* in);

/// Stream repair; result equals fix_scalar. Inputs shorter than 17 units fall
/// back to the scalar procedure.
void fix_stream_bytesplit(std::span<const char16_t> in, std::span<char16_t> out,
                          bytesplit_backend backend = bytesplit_backend::automatic);

namespace detail {
bool neon_bytesplit_available();
void fix_stream_bytesplit_neon(char16_t* out, const char16_t* in, std::size_t n);
}  // namespace detail

}  // namespace utf16mend
