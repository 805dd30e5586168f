#include "utf16mend/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace utf16mend {

std::uint64_t steady_now_ns() {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now().time_since_epoch())
          .count());
}

bench_result measure(std::string_view impl_name, std::size_t input_units,
                     const std::function<void()>& run_once,
                     const measure_options& options) {
  if (input_units == 0) throw std::invalid_argument("measure: input must be non-empty");
  if (options.iterations < 1) throw std::invalid_argument("measure: iterations < 1");

  const clock_fn clock = options.clock ? options.clock : clock_fn(steady_now_ns);

  std::uint64_t reps = options.reps;
  if (reps == 0) {
    // Grow the repetition count until one iteration is long enough to time.
    reps = 1;
    for (;;) {
      const std::uint64_t t0 = clock();
      for (std::uint64_t r = 0; r < reps; r++) run_once();
      const std::uint64_t t1 = clock();
      if (t1 < t0) throw std::runtime_error("measure: clock went backwards");
      const std::uint64_t elapsed = t1 - t0;
      if (elapsed >= options.min_iteration_ns) break;
      if (elapsed == 0) {
        reps *= 8;
      } else {
        const std::uint64_t scaled =
            reps * (options.min_iteration_ns + options.min_iteration_ns / 4) / elapsed;
        reps = std::max(reps * 2, scaled + 1);
      }
      if (reps > (std::uint64_t{1} << 40))
        throw std::runtime_error("measure: cannot reach the minimum iteration time");
    }
  }

  std::vector<std::uint64_t> durations(static_cast<std::size_t>(options.iterations));
  std::uint64_t prev = clock();
  for (auto& duration : durations) {
    for (std::uint64_t r = 0; r < reps; r++) run_once();
    const std::uint64_t t = clock();
    if (t < prev) throw std::runtime_error("measure: clock went backwards");
    duration = t - prev;
    prev = t;
  }

  bench_result result;
  result.impl_name = std::string(impl_name);
  result.input_units = input_units;
  result.bytes_per_rep = 2 * input_units;
  result.reps_per_iteration = reps;
  result.iterations = options.iterations;
  result.best_ns = *std::min_element(durations.begin(), durations.end());

  long double sum = 0.0L;
  for (const std::uint64_t d : durations) sum += static_cast<long double>(d);
  result.mean_ns = static_cast<double>(sum / durations.size());

  const double bytes_per_iteration = static_cast<double>(result.bytes_per_rep) *
                                     static_cast<double>(reps);
  // bytes / ns == 10^9 bytes / s == decimal GB/s
  result.throughput_gbps =
      result.best_ns != 0 ? bytes_per_iteration / static_cast<double>(result.best_ns) : 0.0;
  result.error_margin_pct =
      result.best_ns != 0
          ? 100.0 * (result.mean_ns - static_cast<double>(result.best_ns)) /
                static_cast<double>(result.best_ns)
          : 0.0;
  return result;
}

bench_result measure_kernel(const kernel_id& id, std::span<const char16_t> input,
                            std::span<char16_t> scratch,
                            const measure_options& options) {
  if (scratch.size() < input.size())
    throw std::invalid_argument("measure_kernel: scratch is smaller than the input");
  const auto out = scratch.subspan(0, input.size());
  if (options.mode == bench_mode::in_place) {
    std::copy(input.begin(), input.end(), out.begin());
    return measure(to_string(id), input.size(),
                   [&] { to_well_formed_in_place(out, id); }, options);
  }
  return measure(to_string(id), input.size(),
                 [&] { to_well_formed(input, out, id); }, options);
}

std::vector<std::size_t> sweep_sizes(std::size_t max_units, std::size_t chunks) {
  if (chunks < 1) throw std::invalid_argument("sweep_sizes: chunks < 1");
  std::vector<std::size_t> sizes;
  sizes.reserve(chunks);
  for (std::size_t k = 1; k <= chunks; k++)
    sizes.push_back(std::max<std::size_t>(1, max_units * k / chunks));
  return sizes;
}

std::vector<sweep_series> scaling_sweep(std::size_t max_units, std::size_t chunks,
                                        const generator_config& gen,
                                        const std::vector<kernel_id>& impls,
                                        const measure_options& options) {
  const std::vector<std::size_t> sizes = sweep_sizes(max_units, chunks);
  const int passes = std::max(1, options.sweep_passes);

  std::vector<sweep_series> series(impls.size());
  for (std::size_t i = 0; i < impls.size(); i++) {
    series[i].impl_name = to_string(impls[i]);
    series[i].points.resize(sizes.size());
  }

  std::vector<std::size_t> order(sizes.size());
  for (std::size_t s = 0; s < order.size(); s++) order[s] = s;

  std::vector<char16_t> scratch(max_units == 0 ? 1 : max_units);
  for (int pass = 0; pass < passes; pass++) {
    // Visit sizes in a different order each pass so that phases of host load
    // do not map onto a fixed size range.
    std::shuffle(order.begin(), order.end(), std::mt19937_64(0x5EED0000 + pass));
    for (const std::size_t s : order) {
      generator_config cfg = gen;
      cfg.length_units = sizes[s];
      const std::vector<char16_t> input = generate(cfg);
      for (std::size_t i = 0; i < impls.size(); i++) {
        bench_result r = measure_kernel(impls[i], input, scratch, options);
        sweep_point& point = series[i].points[s];
        if (pass == 0 || r.best_ns * point.result.reps_per_iteration <
                             point.result.best_ns * r.reps_per_iteration)
          point = {sizes[s], std::move(r)};
      }
    }
  }
  return series;
}

void write_csv(const std::vector<sweep_series>& series, std::ostream& out) {
  out << "impl,input_units,bytes,best_ns,mean_ns,gbps,error_margin_pct\n";
  char line[256];
  for (const sweep_series& s : series) {
    for (const sweep_point& p : s.points) {
      const bench_result& r = p.result;
      std::snprintf(line, sizeof line, "%s,%zu,%zu,%" PRIu64 ",%.17g,%.17g,%.17g\n",
                    r.impl_name.c_str(), r.input_units, r.bytes_per_rep, r.best_ns,
                    r.mean_ns, r.throughput_gbps, r.error_margin_pct);
      out << line;
    }
  }
}

void write_csv_file(const std::vector<sweep_series>& series, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_csv(series, out);
  if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

std::vector<sweep_series> parse_csv(std::istream& in) {
  std::vector<sweep_series> series;
  std::string line;
  if (!std::getline(in, line)) return series;  // header

  std::map<std::string, std::size_t> index;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string cell;

    bench_result r;
    std::getline(fields, r.impl_name, ',');
    std::getline(fields, cell, ',');
    r.input_units = std::stoull(cell);
    std::getline(fields, cell, ',');
    r.bytes_per_rep = std::stoull(cell);
    std::getline(fields, cell, ',');
    r.best_ns = std::stoull(cell);
    std::getline(fields, cell, ',');
    r.mean_ns = std::stod(cell);
    std::getline(fields, cell, ',');
    r.throughput_gbps = std::stod(cell);
    std::getline(fields, cell, ',');
    r.error_margin_pct = std::stod(cell);

    auto [it, inserted] = index.try_emplace(r.impl_name, series.size());
    if (inserted) series.push_back({r.impl_name, {}});
    series[it->second].points.push_back({r.input_units, std::move(r)});
  }
  return series;
}

namespace {

constexpr const char* series_colors[] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
};

}  // namespace

void write_svg_plot(const std::vector<sweep_series>& series, std::ostream& out) {
  constexpr int width = 860, height = 520;
  constexpr int left = 70, right = 40, top = 40, bottom = 60;
  constexpr int plot_w = width - left - right;
  constexpr int plot_h = height - top - bottom;

  double max_x = 1.0, max_y = 1.0;
  for (const sweep_series& s : series) {
    for (const sweep_point& p : s.points) {
      max_x = std::max(max_x, static_cast<double>(p.input_units));
      max_y = std::max(max_y, p.result.throughput_gbps);
    }
  }
  max_y *= 1.05;

  const auto sx = [&](double units) { return left + units / max_x * plot_w; };
  const auto sy = [&](double gbps) { return top + plot_h - gbps / max_y * plot_h; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (int tick = 0; tick <= 4; tick++) {
    const double gy = top + plot_h - tick * plot_h / 4.0;
    const double value = max_y * tick / 4.0;
    out << "<line x1=\"" << left << "\" y1=\"" << gy << "\" x2=\"" << left + plot_w
        << "\" y2=\"" << gy << "\" stroke=\"#dddddd\"/>\n";
    char label[48];
    std::snprintf(label, sizeof label, "%.2f", value);
    out << "<text x=\"" << left - 8 << "\" y=\"" << gy + 4
        << "\" text-anchor=\"end\">" << label << "</text>\n";
  }
  for (int tick = 0; tick <= 4; tick++) {
    const double gx = left + tick * plot_w / 4.0;
    char label[48];
    std::snprintf(label, sizeof label, "%.0f", max_x * tick / 4.0);
    out << "<text x=\"" << gx << "\" y=\"" << top + plot_h + 20
        << "\" text-anchor=\"middle\">" << label << "</text>\n";
  }
  out << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 16
      << "\" text-anchor=\"middle\">input size (code units)</text>\n";
  out << "<text x=\"18\" y=\"" << top + plot_h / 2
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << top + plot_h / 2
      << ")\">throughput (GB/s)</text>\n";
  out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w
      << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (std::size_t i = 0; i < series.size(); i++) {
    const char* color = series_colors[i % std::size(series_colors)];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (const sweep_point& p : series[i].points)
      out << sx(static_cast<double>(p.input_units)) << "," << sy(p.result.throughput_gbps) << " ";
    out << "\"/>\n";
    const double ly = top + 16 + 16 * static_cast<double>(i);
    out << "<line x1=\"" << left + 12 << "\" y1=\"" << ly << "\" x2=\"" << left + 36
        << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << left + 42 << "\" y=\"" << ly + 4 << "\">" << series[i].impl_name
        << "</text>\n";
  }
  out << "</svg>\n";
}

void write_svg_plot_file(const std::vector<sweep_series>& series, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_svg_plot(series, out);
  if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

}  // namespace utf16mend
