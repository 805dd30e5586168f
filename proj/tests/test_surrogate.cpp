#include "utf16mend/surrogate.hpp"

#include <vector>

#include "doctest.h"
#include "test_helpers.hpp"
#include "utf16mend/datagen.hpp"

using namespace utf16mend;

TEST_CASE("classify tags the surrogate ranges") {
  CHECK(classify(0x0041) == surrogate_class::non_surrogate);
  CHECK(classify(0xD800) == surrogate_class::high_surrogate);
  CHECK(classify(0xDC00) == surrogate_class::low_surrogate);
  CHECK(classify(0xFFFD) == surrogate_class::non_surrogate);

  // Range edges.
  CHECK(classify(0xD7FF) == surrogate_class::non_surrogate);
  CHECK(classify(0xDBFF) == surrogate_class::high_surrogate);
  CHECK(classify(0xDFFF) == surrogate_class::low_surrogate);
  CHECK(classify(0xE000) == surrogate_class::non_surrogate);
}

TEST_CASE("classify agrees with the range definition on every code unit") {
  for (std::uint32_t u = 0; u <= 0xFFFF; u++) {
    const auto unit = static_cast<char16_t>(u);
    const bool high = u >= 0xD800 && u <= 0xDBFF;
    const bool low = u >= 0xDC00 && u <= 0xDFFF;
    CHECK(is_high_surrogate(unit) == high);
    CHECK(is_low_surrogate(unit) == low);
    CHECK(is_surrogate(unit) == (high || low));
  }
}

TEST_CASE("compose_code_point") {
  CHECK(compose_code_point(0xD83D, 0xDE0A) == 0x1F60A);
  CHECK(compose_code_point(0xD800, 0xDC00) == 0x10000);
  CHECK(compose_code_point(0xDBFF, 0xDFFF) == 0x10FFFF);

  // Every composition lands in the supplementary planes.
  for (char16_t high = 0xD800; high <= 0xDBFF; high = static_cast<char16_t>(high + 0x3F)) {
    for (char16_t low = 0xDC00; low <= 0xDFFF; low = static_cast<char16_t>(low + 0x3F)) {
      const char32_t cp = compose_code_point(high, low);
      CHECK(cp >= 0x10000);
      CHECK(cp <= 0x10FFFF);
    }
  }
}

TEST_CASE("fix_scalar examples") {
  const auto fixed = [](std::vector<char16_t> in) {
    std::vector<char16_t> out(in.size());
    fix_scalar(in, out);
    return out;
  };

  CHECK(fixed({0x0048, 0x0069}) == std::vector<char16_t>{0x0048, 0x0069});
  CHECK(fixed({0xD800, 0x0041}) == std::vector<char16_t>{0xFFFD, 0x0041});
  CHECK(fixed({0xD83D, 0xDE0A}) == std::vector<char16_t>{0xD83D, 0xDE0A});
  CHECK(fixed({0xDC00}) == std::vector<char16_t>{0xFFFD});
  CHECK(fixed({}) == std::vector<char16_t>{});

  // A valid pair is consumed as a unit: the second low surrogate has no
  // preceding high left to pair with.
  CHECK(fixed({0xD800, 0xDC00, 0xDC00}) ==
        std::vector<char16_t>{0xD800, 0xDC00, 0xFFFD});
}

TEST_CASE("fix_scalar repairs the 31-unit mixed sample") {
  const auto in = testutil::mixed_sample_input();
  CHECK(testutil::scalar_fixed(in) == testutil::mixed_sample_expected());
}

TEST_CASE("is_well_formed") {
  CHECK(is_well_formed(std::vector<char16_t>{}));
  CHECK_FALSE(is_well_formed(std::vector<char16_t>{0xD800}));
  CHECK(is_well_formed(std::vector<char16_t>{0xD83D, 0xDE0A}));
  CHECK_FALSE(is_well_formed(std::vector<char16_t>{0xDE0A, 0xD83D}));
  CHECK(is_well_formed(std::vector<char16_t>{0x0041, 0x0042}));
}

TEST_CASE("fix_scalar invariants on exhaustive boundary sequences") {
  testutil::for_each_boundary_sequence(4, [](std::span<const char16_t> in) {
    const std::vector<char16_t> out = testutil::scalar_fixed(in);

    REQUIRE(out.size() == in.size());
    CHECK(is_well_formed(out));

    // Idempotence.
    CHECK(testutil::scalar_fixed(out) == out);

    // Minimality: only unpaired surrogates change, and only to U+FFFD.
    for (std::size_t i = 0; i < in.size(); i++) {
      if (out[i] != in[i]) {
        CHECK(is_surrogate(in[i]));
        CHECK(out[i] == replacement_character);
      }
    }

    // In-place agrees with copy.
    std::vector<char16_t> buffer(in.begin(), in.end());
    fix_scalar(buffer, buffer);
    CHECK(buffer == out);

    // Independent per-unit formulation agrees.
    CHECK(testutil::reference_fix(in) == out);

    CHECK(is_well_formed(in) == (out == std::vector<char16_t>(in.begin(), in.end())));
  });
}

TEST_CASE("fix_scalar matches the reference on random inputs") {
  for (std::uint64_t seed = 0; seed < 200; seed++) {
    const auto in = generate({.length_units = (seed * 13) % 97,
                              .pair_pct = 0.1,
                              .mismatch_pct = 0.3,
                              .seed = seed});
    CHECK(testutil::scalar_fixed(in) == testutil::reference_fix(in));
  }
}

TEST_CASE("unpaired_surrogate_offsets") {
  const std::vector<char16_t> in{0x0041, 0xDC00, 0x0042, 0xD800};
  CHECK(unpaired_surrogate_offsets(in) == std::vector<std::size_t>{1, 3});
  CHECK(unpaired_surrogate_offsets(in, 1) == std::vector<std::size_t>{1});
  CHECK(unpaired_surrogate_offsets(testutil::mixed_sample_input()) ==
        std::vector<std::size_t>{10, 21});
}
