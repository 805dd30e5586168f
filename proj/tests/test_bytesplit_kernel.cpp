#include "utf16mend/bytesplit_kernel.hpp"

#include <vector>

#include "doctest.h"
#include "test_helpers.hpp"
#include "utf16mend/datagen.hpp"
#include "utf16mend/probe.hpp"

using namespace utf16mend;

TEST_CASE("high byte masked with 0xFC fully determines the surrogate class") {
  for (std::uint32_t u = 0; u <= 0xFFFF; u++) {
    const auto unit = static_cast<char16_t>(u);
    const std::uint8_t tag = static_cast<std::uint8_t>(unit >> 8) & 0xFC;
    CHECK(is_high_surrogate(unit) == (tag == 0xD8));
    CHECK(is_low_surrogate(unit) == (tag == 0xDC));
  }
}

TEST_CASE("segment_mismatch classifies and copies") {
  std::vector<char16_t> in(17, 0x0041);
  std::vector<char16_t> out(17, 0x7777);

  SUBCASE("clean window gives an all-zero mask") {
    const byte_mask16 mask = segment_mismatch(out.data() + 1, in.data() + 1);
    CHECK_FALSE(any_nonzero(mask));
    for (unsigned i = 1; i <= 16; i++) CHECK(out[i] == 0x0041);
  }

  SUBCASE("lone high surrogate in the lookback fires lane 0") {
    in[0] = 0xD800;
    const byte_mask16 mask = segment_mismatch(out.data() + 1, in.data() + 1);
    CHECK(mask[0] == 0xFF);
    for (unsigned i = 1; i < 16; i++) CHECK(mask[i] == 0);
  }

  SUBCASE("valid pair straddling the segment start stays silent") {
    in[0] = 0xD83D;
    in[1] = 0xDE0A;
    const byte_mask16 mask = segment_mismatch(out.data() + 1, in.data() + 1);
    CHECK_FALSE(any_nonzero(mask));
    CHECK(testutil::scalar_fixed(in) == in);  // nothing to repair
  }
}

TEST_CASE("any_nonzero") {
  byte_mask16 mask{};
  CHECK_FALSE(any_nonzero(mask));
  mask[9] = 0xFF;
  CHECK(any_nonzero(mask));
}

TEST_CASE("masks_to_bitset places each lane at bit 16k+i") {
  const byte_mask16 zero{};
  CHECK(masks_to_bitset(zero, zero, zero, zero) == 0);

  byte_mask16 m0{};
  m0[0] = 0xFF;
  CHECK(masks_to_bitset(m0, zero, zero, zero) == 1);

  byte_mask16 m2{};
  m2[5] = 0xFF;
  CHECK(masks_to_bitset(zero, zero, m2, zero) == (std::uint64_t{1} << 37));

  // Every single-bit placement.
  for (unsigned k = 0; k < 4; k++) {
    for (unsigned i = 0; i < 16; i++) {
      byte_mask16 masks[4] = {};
      masks[k][i] = 0xFF;
      CHECK(masks_to_bitset(masks[0], masks[1], masks[2], masks[3]) ==
            std::uint64_t{1} << (16 * k + i));
    }
  }
}

TEST_CASE("fix_superblock64 passes a well-formed window through") {
  std::vector<char16_t> in(65, 0x0041);
  in[3] = 0xD83D;
  in[4] = 0xDE0A;
  std::vector<char16_t> out(65, 0x7777);
  probe::reset();
  CHECK(fix_superblock64(out.data() + 1, in.data() + 1));
  CHECK(probe::local().corrected_blocks == 0);
  for (unsigned i = 1; i <= 64; i++) CHECK(out[i] == in[i]);
}

TEST_CASE("fix_superblock64 repairs lone surrogates at offset 7") {
  SUBCASE("lone low surrogate") {
    std::vector<char16_t> in(65, 0x0041);
    in[1 + 7] = 0xDC00;
    std::vector<char16_t> out(65, 0);
    CHECK_FALSE(fix_superblock64(out.data() + 1, in.data() + 1));
    auto expected = testutil::scalar_fixed(std::span(in).subspan(1));
    CHECK(out[1 + 7] == replacement_character);
    CHECK(std::vector<char16_t>(out.begin() + 1, out.end()) == expected);
  }

  SUBCASE("lone high surrogate is indicated one lane late and fixed a unit back") {
    std::vector<char16_t> in(65, 0x0041);
    in[1 + 7] = 0xD800;

    // The mismatch registers at bitset position 8, not 7.
    std::vector<char16_t> scratch(65, 0);
    const byte_mask16 m0 = segment_mismatch(scratch.data() + 1, in.data() + 1);
    const byte_mask16 zero{};
    CHECK(masks_to_bitset(m0, zero, zero, zero) == (std::uint64_t{1} << 8));

    std::vector<char16_t> out(65, 0);
    CHECK_FALSE(fix_superblock64(out.data() + 1, in.data() + 1));
    CHECK(out[1 + 7] == replacement_character);
    auto expected = testutil::scalar_fixed(std::span(in).subspan(1));
    CHECK(std::vector<char16_t>(out.begin() + 1, out.end()) == expected);
  }
}

TEST_CASE("fix_stream_bytesplit edge cases") {
  const auto fix = [](std::span<const char16_t> in, std::span<char16_t> out) {
    fix_stream_bytesplit(in, out, bytesplit_backend::emulated);
  };

  CHECK(testutil::run_copy(fix, std::vector<char16_t>{}).empty());

  // At 16 units the stream is handled entirely by the scalar fallback.
  std::vector<char16_t> slim(16, 0x0041);
  slim[5] = 0xDBFF;
  auto expected = slim;
  expected[5] = replacement_character;
  CHECK(testutil::run_copy(fix, slim) == expected);
  CHECK(testutil::run_in_place(fix, slim) == expected);

  CHECK(testutil::run_copy(fix, testutil::mixed_sample_input()) ==
        testutil::mixed_sample_expected());
  CHECK(testutil::run_in_place(fix, testutil::mixed_sample_input()) ==
        testutil::mixed_sample_expected());
}

TEST_CASE("fix_stream_bytesplit equals fix_scalar on a million-unit input") {
  const auto in = generate(
      {.length_units = 1'000'000, .pair_pct = 0.001, .mismatch_pct = 0.001, .seed = 4});
  const auto expected = testutil::scalar_fixed(in);
  std::vector<char16_t> out(in.size());
  fix_stream_bytesplit(in, out, bytesplit_backend::emulated);
  CHECK(out == expected);
}

TEST_CASE("fix_stream_bytesplit equals fix_scalar exhaustively on short sequences") {
  const bool native = bytesplit_native_supported();
  testutil::for_each_boundary_sequence(4, [native](std::span<const char16_t> in) {
    const auto expected = testutil::scalar_fixed(in);
    std::vector<char16_t> out(in.size());
    fix_stream_bytesplit(in, out, bytesplit_backend::emulated);
    REQUIRE(out == expected);
    if (native) {
      std::vector<char16_t> nat(in.size());
      fix_stream_bytesplit(in, nat, bytesplit_backend::native);
      REQUIRE(nat == expected);
    }
  });
}

TEST_CASE("fix_stream_bytesplit equals fix_scalar on random superblock-sized inputs") {
  for (std::uint64_t seed = 0; seed < 300; seed++) {
    const auto in = generate({.length_units = (seed * 29) % 400,
                              .pair_pct = 0.1,
                              .mismatch_pct = 0.25,
                              .seed = 7000 + seed});
    const auto expected = testutil::scalar_fixed(in);
    std::vector<char16_t> out(in.size());
    fix_stream_bytesplit(in, out, bytesplit_backend::emulated);
    REQUIRE(out == expected);

    std::vector<char16_t> buffer(in.begin(), in.end());
    fix_stream_bytesplit(buffer, buffer, bytesplit_backend::emulated);
    REQUIRE(buffer == expected);
  }
}

TEST_CASE("the correction path never runs on well-formed input") {
  const auto in = generate(
      {.length_units = 20000, .pair_pct = 0.05, .mismatch_pct = 0.0, .seed = 21});
  REQUIRE(is_well_formed(in));
  std::vector<char16_t> out(in.size());
  probe::reset();
  fix_stream_bytesplit(in, out, bytesplit_backend::emulated);
  CHECK(probe::local().corrected_blocks == 0);
  CHECK(out == in);
}
