#include "utf16mend/datagen.hpp"

#include <cassert>
#include <random>

namespace utf16mend {

namespace {

// Thin wrapper that turns raw mt19937_64 output into bounded draws without
// going through std::uniform_int_distribution, whose mapping is not pinned by
// the standard and may differ between library implementations.
class sampler {
 public:
  explicit sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next() { return rng_(); }

  std::uint32_t below(std::uint32_t n) {
    return static_cast<std::uint32_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  bool chance(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return next() < static_cast<std::uint64_t>(p * 18446744073709551616.0);  // p * 2^64
  }

 private:
  std::mt19937_64 rng_;
};

char16_t random_filler(sampler& s) {
  // Non-surrogate BMP scalars excluding NUL and the FFFE/FFFF noncharacters:
  // [0001, D7FF] and [E000, FFFD].
  constexpr std::uint32_t low_span = 0xD7FF;
  constexpr std::uint32_t high_span = 0xFFFD - 0xE000 + 1;
  const std::uint32_t r = s.below(low_span + high_span);
  return static_cast<char16_t>(r < low_span ? 1 + r : 0xE000 + (r - low_span));
}

}  // namespace

std::vector<char16_t> generate(const generator_config& config) {
  assert(config.pair_pct >= 0.0 && config.pair_pct <= 1.0);
  assert(config.mismatch_pct >= 0.0 && config.mismatch_pct <= 1.0);

  sampler s(config.seed);
  std::vector<char16_t> units;
  units.reserve(config.length_units);

  // A pair covers two unit slots. Drawing pairs per character with
  // probability q puts a 2q/(1+q) fraction of code units inside pairs, so
  // q = p/(2-p) realises the configured unit fraction p exactly.
  const double pair_char_prob = config.pair_pct / (2.0 - config.pair_pct);

  while (units.size() < config.length_units) {
    if (s.chance(pair_char_prob)) {
      if (units.size() + 2 <= config.length_units) {
        units.push_back(static_cast<char16_t>(0xD800 + s.below(0x400)));
        units.push_back(static_cast<char16_t>(0xDC00 + s.below(0x400)));
      } else {
        // A pair no longer fits; the final slot degrades to a filler.
        units.push_back(random_filler(s));
      }
    } else if (s.chance(config.mismatch_pct)) {
      const char16_t base = s.chance(0.5) ? 0xD800 : 0xDC00;
      units.push_back(static_cast<char16_t>(base + s.below(0x400)));
    } else {
      units.push_back(random_filler(s));
    }
  }
  return units;
}

}  // namespace utf16mend
