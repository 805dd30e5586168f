// Native backend for the bitmask kernel. Compiled for every target; the
// AVX-512 code paths carry function-level target attributes so the rest of
// the library can be built without -mavx512* and still dispatch here at
// runtime on capable processors.

#include "utf16mend/bitmask_kernel.hpp"

#include <cassert>
#include <cstddef>

#include "utf16mend/surrogate.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define UTF16MEND_HAVE_AVX512 1
#include <immintrin.h>
#else
#define UTF16MEND_HAVE_AVX512 0
#endif

namespace utf16mend::detail {

#if UTF16MEND_HAVE_AVX512

bool avx512_mask_registers_available() {
  return __builtin_cpu_supports("avx512f") && __builtin_cpu_supports("avx512bw");
}

#define UTF16MEND_AVX512 __attribute__((target("avx512f,avx512bw")))

template <bool InPlace>
UTF16MEND_AVX512 static inline void fix_block32(char16_t* out, const char16_t* in) {
  const __m512i lookback = _mm512_loadu_si512(in - 1);
  const __m512i block = _mm512_loadu_si512(in);

  const __m512i range_tag = _mm512_set1_epi16(static_cast<short>(0xFC00));
  const __mmask32 lb_is_high = _mm512_cmpeq_epi16_mask(
      _mm512_and_si512(lookback, range_tag), _mm512_set1_epi16(static_cast<short>(0xD800)));
  const __mmask32 block_is_low = _mm512_cmpeq_epi16_mask(
      _mm512_and_si512(block, range_tag), _mm512_set1_epi16(static_cast<short>(0xDC00)));

  const __mmask32 illseq = _kxor_mask32(lb_is_high, block_is_low);
  if (!_ktestz_mask32_u8(illseq, illseq)) {
    // _kandn computes ~first & second.
    const __mmask32 lb_illseq = _kandn_mask32(block_is_low, lb_is_high);
    const __mmask32 block_illseq = _kor_mask32(
        _kshiftri_mask32(lb_illseq, 1), _kandn_mask32(lb_is_high, block_is_low));

    const __m512i replacement =
        _mm512_set1_epi16(static_cast<short>(replacement_character));
    // Store of at most one unit into out[-1], masked with just the first bit
    // of lb_illseq; never overlaps the store to out below.
    _mm512_mask_storeu_epi16(out - 1, _cvtu32_mask32(lb_illseq & 1u), replacement);
    if constexpr (InPlace) {
      _mm512_mask_storeu_epi16(out, block_illseq, replacement);
    } else {
      _mm512_storeu_si512(out, _mm512_mask_blend_epi16(block_illseq, block, replacement));
    }
  } else if constexpr (!InPlace) {
    _mm512_storeu_si512(out, block);
  }
}

UTF16MEND_AVX512 void fix_stream_bitmask_avx512(char16_t* out, const char16_t* in,
                                                std::size_t n) {
  constexpr std::size_t W = 32;
  if (n < W + 1) {
    fix_scalar(out, in, n);
    return;
  }

  if (out == in) {
    if (is_low_surrogate(in[0])) out[0] = replacement_character;
    for (std::size_t i = 1; i + W <= n; i += W) fix_block32<true>(out + i, in + i);
    fix_block32<true>(out + n - W, in + n - W);
    if (is_high_surrogate(out[n - 1])) out[n - 1] = replacement_character;
  } else {
    out[0] = is_low_surrogate(in[0]) ? replacement_character : in[0];
    for (std::size_t i = 1; i + W <= n; i += W) fix_block32<false>(out + i, in + i);
    fix_block32<false>(out + n - W, in + n - W);
    out[n - 1] = is_high_surrogate(out[n - 1]) ? replacement_character : out[n - 1];
  }
}

#else  // !UTF16MEND_HAVE_AVX512

bool avx512_mask_registers_available() { return false; }

void fix_stream_bitmask_avx512(char16_t*, const char16_t*, std::size_t) {
  assert(!"native bitmask backend not compiled for this target");
}

#endif

}  // namespace utf16mend::detail
