#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace utf16mend {

/// Recipe for a synthetic UTF-16 test string. `pair_pct` is the target
/// fraction of code units covered by valid surrogate pairs; `mismatch_pct`
/// the fraction of the remaining units that are isolated surrogates (picked
/// 50/50 high or low). Everything else is a uniformly random non-surrogate
/// BMP scalar. Both fractions are in [0, 1].
struct generator_config {
  std::size_t length_units = 0;
  double pair_pct = 0.0;
  double mismatch_pct = 0.0;
  std::uint64_t seed = 0;
};

/// Deterministic for a fixed config: the stream is drawn from a seeded
/// mt19937_64, which is part of the test-vector contract of this repository.
std::vector<char16_t> generate(const generator_config& config);

}  // namespace utf16mend
