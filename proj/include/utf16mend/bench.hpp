#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "utf16mend/datagen.hpp"
#include "utf16mend/driver.hpp"

namespace utf16mend {

/// Monotonic nanosecond timestamps. Injectable so the harness arithmetic is
/// testable without real timing.
using clock_fn = std::function<std::uint64_t()>;

std::uint64_t steady_now_ns();

struct bench_result {
  std::string impl_name;
  std::size_t input_units = 0;
  std::size_t bytes_per_rep = 0;  // 2 x input_units
  std::uint64_t reps_per_iteration = 0;
  int iterations = 0;
  std::uint64_t best_ns = 0;          // fastest iteration
  double mean_ns = 0.0;
  double throughput_gbps = 0.0;       // decimal GB/s: bytes per nanosecond
  double error_margin_pct = 0.0;      // 100 * (mean - best) / best
};

/// copy: repair input into a scratch buffer every repetition. in_place:
/// repair the scratch buffer itself; after one repetition the buffer is
/// well-formed, so this measures the no-store fast path on valid data.
enum class bench_mode { copy, in_place };

struct measure_options {
  int iterations = 100;
  std::uint64_t reps = 0;                      // 0: calibrate to min_iteration_ns
  std::uint64_t min_iteration_ns = 1'000'000;  // 1 ms
  bench_mode mode = bench_mode::copy;
  int sweep_passes = 1;  // scaling_sweep only: keep each point's best pass
  clock_fn clock;                              // empty: steady clock
};

/// Time `run_once` (one pass over input_units code units). Each iteration
/// repeats the body `reps` times so it lasts at least min_iteration_ns;
/// throughput is bytes per iteration divided by the best iteration time.
/// Strictly single-threaded. A non-monotonic clock raises std::runtime_error.
bench_result measure(std::string_view impl_name, std::size_t input_units,
                     const std::function<void()>& run_once,
                     const measure_options& options = {});

/// Convenience: measure one kernel repairing `input` into `scratch`.
bench_result measure_kernel(const kernel_id& id, std::span<const char16_t> input,
                            std::span<char16_t> scratch,
                            const measure_options& options = {});

struct sweep_point {
  std::size_t input_units = 0;
  bench_result result;
};

struct sweep_series {
  std::string impl_name;
  std::vector<sweep_point> points;
};

/// The sizes measured by scaling_sweep: max_units split into `chunks` nearly
/// equal steps, ending exactly at max_units.
std::vector<std::size_t> sweep_sizes(std::size_t max_units, std::size_t chunks);

/// Regenerate an input per `gen` at each size and measure every kernel on it.
/// With sweep_passes > 1 the whole sweep repeats and each point keeps its
/// fastest pass, spreading measurements in time to ride out load spikes.
std::vector<sweep_series> scaling_sweep(std::size_t max_units, std::size_t chunks,
                                        const generator_config& gen,
                                        const std::vector<kernel_id>& impls,
                                        const measure_options& options = {});

// CSV report: header "impl,input_units,bytes,best_ns,mean_ns,gbps,
// error_margin_pct", one row per measured point, numerics round-trip exact.
void write_csv(const std::vector<sweep_series>& series, std::ostream& out);
void write_csv_file(const std::vector<sweep_series>& series, const std::string& path);
std::vector<sweep_series> parse_csv(std::istream& in);

/// Line plot of throughput against input size, one polyline per series.
void write_svg_plot(const std::vector<sweep_series>& series, std::ostream& out);
void write_svg_plot_file(const std::vector<sweep_series>& series, const std::string& path);

}  // namespace utf16mend
