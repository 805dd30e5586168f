#include "utf16mend/probe.hpp"

namespace utf16mend::probe {

counters& local() {
  thread_local counters c;
  return c;
}

void reset() { local() = counters{}; }

}  // namespace utf16mend::probe
