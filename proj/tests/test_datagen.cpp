#include "utf16mend/datagen.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"
#include "test_helpers.hpp"
#include "utf16mend/surrogate.hpp"

using namespace utf16mend;

namespace {

std::size_t count_valid_pairs(std::span<const char16_t> in) {
  std::size_t pairs = 0, i = 0;
  while (i < in.size()) {
    if (is_high_surrogate(in[i]) && i + 1 < in.size() && is_low_surrogate(in[i + 1])) {
      pairs++;
      i += 2;
    } else {
      i++;
    }
  }
  return pairs;
}

}  // namespace

TEST_CASE("generate is deterministic per seed") {
  const generator_config cfg{
      .length_units = 5000, .pair_pct = 0.01, .mismatch_pct = 0.01, .seed = 42};
  CHECK(generate(cfg) == generate(cfg));

  generator_config other = cfg;
  other.seed = 43;
  CHECK(generate(cfg) != generate(other));
}

TEST_CASE("generate with no surrogate rates emits clean BMP text") {
  const auto units =
      generate({.length_units = 100, .pair_pct = 0.0, .mismatch_pct = 0.0, .seed = 7});
  REQUIRE(units.size() == 100);
  CHECK(is_well_formed(units));
  for (const char16_t u : units) {
    CHECK_FALSE(is_surrogate(u));
    CHECK(u != 0x0000);
    CHECK(u != 0xFFFE);
    CHECK(u != 0xFFFF);
  }
}

TEST_CASE("generate emits exactly the requested unit count") {
  for (const std::size_t n : {0u, 1u, 2u, 3u, 17u, 64u, 1023u}) {
    CHECK(generate({.length_units = n, .pair_pct = 0.5, .mismatch_pct = 0.5, .seed = 9})
              .size() == n);
  }

  // A pair drawn at the final slot degrades to a non-surrogate filler even
  // when every character wants to be a pair.
  const auto all_pairs =
      generate({.length_units = 7, .pair_pct = 1.0, .mismatch_pct = 0.0, .seed = 1});
  REQUIRE(all_pairs.size() == 7);
  for (std::size_t i = 0; i + 1 < 7; i += 2) {
    CHECK(is_high_surrogate(all_pairs[i]));
    CHECK(is_low_surrogate(all_pairs[i + 1]));
  }
  CHECK_FALSE(is_surrogate(all_pairs[6]));
  CHECK(is_well_formed(all_pairs));
}

TEST_CASE("pair and mismatch rates converge at the one-million scale") {
  constexpr std::size_t n = 1'000'000;
  constexpr double rate = 0.001;
  const auto units =
      generate({.length_units = n, .pair_pct = rate, .mismatch_pct = rate, .seed = 2024});
  REQUIRE(units.size() == n);

  // Per-character pair probability q makes 2q/(1+q) of units belong to
  // pairs; q = rate/(2-rate) realises the configured unit fraction.
  const double q = rate / (2 - rate);
  const double expected_chars = static_cast<double>(n) / (1 + q);
  const double expected_pairs = expected_chars * q;
  const double sigma_pairs = std::sqrt(expected_pairs * (1 - q));

  const auto pairs = static_cast<double>(count_valid_pairs(units));
  CHECK(std::abs(pairs - expected_pairs) <= 5 * sigma_pairs);

  const double remaining = static_cast<double>(n) - 2 * pairs;
  const double expected_isolated = remaining * rate;
  const double sigma_isolated = std::sqrt(expected_isolated * (1 - rate));
  const auto isolated = static_cast<double>(unpaired_surrogate_offsets(units).size());
  CHECK(std::abs(isolated - expected_isolated) <= 5 * sigma_isolated);

  CHECK_FALSE(is_well_formed(units));
}

TEST_CASE("isolated surrogates split evenly between high and low") {
  constexpr std::size_t n = 100'000;
  const auto units =
      generate({.length_units = n, .pair_pct = 0.0, .mismatch_pct = 1.0, .seed = 5});
  std::size_t highs = 0;
  for (const char16_t u : units) {
    REQUIRE(is_surrogate(u));
    if (is_high_surrogate(u)) highs++;
  }
  const double sigma = std::sqrt(n * 0.25);
  CHECK(std::abs(static_cast<double>(highs) - n / 2.0) <= 5 * sigma);
}
