#pragma once

#include <cstdint>

namespace utf16mend::probe {

// Instrumentation for the emulated kernel backends. Tests use these counters
// to check that the branchy fast path really skips the correction logic and
// that in-place processing of valid input performs no stores. The native
// backends are not instrumented.
struct counters {
  std::uint64_t stored_units = 0;      // output units written by block code
  std::uint64_t corrected_blocks = 0;  // blocks that entered the slow path
};

counters& local();
void reset();

}  // namespace utf16mend::probe
