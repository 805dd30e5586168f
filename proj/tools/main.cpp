// Command line front end: fix/check UTF-16 files, generate test corpora, and
// run the throughput benchmark.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "utf16mend/bench.hpp"
#include "utf16mend/codec.hpp"
#include "utf16mend/datagen.hpp"
#include "utf16mend/driver.hpp"
#include "utf16mend/surrogate.hpp"

namespace {

using namespace utf16mend;

std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw std::runtime_error("read failed: " + path);
  return bytes;
}

void write_file_bytes(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

std::optional<endianness> parse_byte_order(const std::string& name) {
  if (name == "le") return endianness::little;
  if (name == "be") return endianness::big;
  return std::nullopt;  // "auto"
}

kernel_id parse_kernel_or_fail(const std::string& name) {
  const auto id = parse_kernel_id(name);
  if (!id) throw CLI::ValidationError("--kernel", "unknown kernel '" + name + "'");
  return *id;
}

struct fix_args {
  std::string path;
  std::string output;
  bool in_place = false;
  std::string byte_order = "auto";
  std::string kernel;
  std::string bom = "preserve";
  bool pad_final = false;
};

int cmd_fix(const fix_args& args) {
  std::optional<kernel_id> kernel;
  if (!args.kernel.empty()) kernel = parse_kernel_or_fail(args.kernel);

  const auto byte_order = parse_byte_order(args.byte_order);
  const auto bytes = read_file_bytes(args.path);
  const decoded_utf16 decoded = decode_utf16_bytes(
      bytes, {.byte_order = byte_order, .pad_final_byte = args.pad_final});
  if (!byte_order && !decoded.had_bom)
    std::cerr << "utf16mend: " << args.path
              << ": no BOM found, assuming little-endian\n";
  if (args.bom == "require" && !decoded.had_bom)
    throw std::runtime_error(args.path + ": BOM required but not present");

  std::vector<char16_t> fixed(decoded.units.size());
  to_well_formed(decoded.units, fixed, kernel);

  std::size_t replacements = decoded.padded ? 1 : 0;
  for (std::size_t i = 0; i < fixed.size(); i++)
    if (fixed[i] != decoded.units[i]) replacements++;

  const bool with_bom = decoded.had_bom && args.bom != "strip";
  const auto out_bytes = encode_utf16_bytes(fixed, decoded.byte_order, with_bom);
  write_file_bytes(args.in_place ? args.path : args.output, out_bytes);

  std::cout << replacements << (replacements == 1 ? " replacement\n" : " replacements\n");
  return 0;
}

struct check_args {
  std::string path;
  std::string byte_order = "auto";
};

int cmd_check(const check_args& args) {
  const auto byte_order = parse_byte_order(args.byte_order);
  const auto bytes = read_file_bytes(args.path);
  const decoded_utf16 decoded = decode_utf16_bytes(bytes, {.byte_order = byte_order});
  if (!byte_order && !decoded.had_bom)
    std::cerr << "utf16mend: " << args.path
              << ": no BOM found, assuming little-endian\n";

  const auto offenders = unpaired_surrogate_offsets(decoded.units, 10);
  if (offenders.empty()) {
    std::cout << args.path << ": well-formed\n";
    return 0;
  }
  std::cout << args.path << ": ill-formed; first offending unit offsets:";
  for (const std::size_t offset : offenders) std::cout << ' ' << offset;
  std::cout << '\n';
  return 1;
}

struct generate_args {
  std::size_t units = 0;
  double pair_pct = 0.0;
  double mismatch_pct = 0.0;
  std::uint64_t seed = 0;
  std::string byte_order = "le";
  bool bom = false;
  std::string output;
};

int cmd_generate(const generate_args& args) {
  const auto order = parse_byte_order(args.byte_order).value_or(endianness::little);
  const auto units = generate({.length_units = args.units,
                               .pair_pct = args.pair_pct,
                               .mismatch_pct = args.mismatch_pct,
                               .seed = args.seed});
  const auto bytes = encode_utf16_bytes(units, order, args.bom);
  if (args.output.empty()) {
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
    std::fflush(stdout);
  } else {
    write_file_bytes(args.output, bytes);
  }
  return 0;
}

struct bench_args {
  std::size_t max_units = 1'000'000;
  std::size_t chunks = 128;
  double pair_pct = 0.001;
  double mismatch_pct = 0.0;
  std::uint64_t seed = 0;
  int iterations = 100;
  int passes = 1;
  std::string mode = "copy";
  std::vector<std::string> kernels;
  std::string csv;
  std::string plot;
};

int cmd_bench(const bench_args& args) {
  std::vector<kernel_id> impls;
  if (args.kernels.empty()) {
    const cpu_features host = detect_cpu_features();
    impls.push_back(kernel_id::scalar());
    impls.push_back(kernel_id::generic(8));
    if (host.wide_mask_registers) impls.push_back(kernel_id::bitmask());
    if (host.byte_deinterleave) impls.push_back(kernel_id::bytesplit());
  } else {
    for (const std::string& name : args.kernels)
      impls.push_back(select_kernel(parse_kernel_or_fail(name)));  // verifies support
  }

  const generator_config gen{.length_units = 0,
                             .pair_pct = args.pair_pct,
                             .mismatch_pct = args.mismatch_pct,
                             .seed = args.seed};
  measure_options options;
  options.iterations = args.iterations;
  options.sweep_passes = args.passes;
  options.mode = args.mode == "inplace" ? bench_mode::in_place : bench_mode::copy;

  std::cout << "benchmarking " << impls.size() << " kernel(s), " << args.chunks
            << " sizes up to " << args.max_units << " code units, " << args.mode
            << " mode\n"
            << "throughput in decimal GB/s (1e9 bytes/s), 2 bytes per code unit; "
            << "best of " << options.iterations << " iterations, >= 1 ms each\n";

  const auto series = scaling_sweep(args.max_units, args.chunks, gen, impls, options);

  for (const sweep_series& s : series) {
    const bench_result& last = s.points.back().result;
    std::printf("%-18s %9zu units  %8.3f GB/s  best %10llu ns  error %5.2f%%\n",
                s.impl_name.c_str(), last.input_units, last.throughput_gbps,
                static_cast<unsigned long long>(last.best_ns), last.error_margin_pct);
  }

  if (!args.csv.empty()) write_csv_file(series, args.csv);
  if (!args.plot.empty()) write_svg_plot_file(series, args.plot);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Repair ill-formed UTF-16 by replacing mismatched surrogates with U+FFFD"};
  app.require_subcommand(1);

  fix_args fix;
  CLI::App* fix_cmd = app.add_subcommand("fix", "Repair a UTF-16 file");
  fix_cmd->add_option("path", fix.path, "input file")->required();
  auto* in_place_opt = fix_cmd->add_flag("-i,--in-place", fix.in_place, "rewrite the input file");
  fix_cmd->add_option("-o,--output", fix.output, "output file")->excludes(in_place_opt);
  fix_cmd->add_option("-e,--endianness", fix.byte_order, "byte order (default auto)")
      ->check(CLI::IsMember({"le", "be", "auto"}));
  fix_cmd->add_option("-k,--kernel", fix.kernel,
                      "kernel override (scalar, generic[4|8|16|32], bitmask[-emulated], "
                      "bytesplit[-emulated])");
  fix_cmd->add_option("--bom", fix.bom, "BOM policy (default preserve)")
      ->check(CLI::IsMember({"preserve", "strip", "require"}));
  fix_cmd->add_flag("--pad-final", fix.pad_final,
                    "treat a dangling final byte as U+FFFD instead of failing");

  check_args check;
  CLI::App* check_cmd = app.add_subcommand("check", "Exit 0 if a UTF-16 file is well-formed, 1 if not");
  check_cmd->add_option("path", check.path, "input file")->required();
  check_cmd->add_option("-e,--endianness", check.byte_order, "byte order (default auto)")
      ->check(CLI::IsMember({"le", "be", "auto"}));

  generate_args gen;
  CLI::App* gen_cmd = app.add_subcommand("generate", "Emit a random UTF-16 string with controlled surrogate rates");
  gen_cmd->add_option("-n,--units", gen.units, "length in code units")->required();
  gen_cmd->add_option("--pair-pct", gen.pair_pct, "fraction of code units in valid pairs [0,1]")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--mismatch-pct", gen.mismatch_pct,
                      "fraction of remaining units that are lone surrogates [0,1]")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("-e,--endianness", gen.byte_order, "byte order (default le)")
      ->check(CLI::IsMember({"le", "be"}));
  gen_cmd->add_flag("--bom", gen.bom, "prepend a byte order mark");
  gen_cmd->add_option("-o,--output", gen.output, "output file (default stdout)");

  bench_args bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Measure repair throughput across input sizes");
  bench_cmd->add_option("--max-units", bench.max_units, "largest input size in code units");
  bench_cmd->add_option("--chunks", bench.chunks, "number of sizes to sweep")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--pair-pct", bench.pair_pct, "valid pair fraction [0,1]")
      ->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--mismatch-pct", bench.mismatch_pct, "lone surrogate fraction [0,1]")
      ->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--seed", bench.seed, "generator seed");
  bench_cmd->add_option("--iterations", bench.iterations, "iterations per measurement")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--mode", bench.mode,
                        "copy into a scratch buffer or repair in place (default copy)")
      ->check(CLI::IsMember({"copy", "inplace"}));
  bench_cmd->add_option("--passes", bench.passes,
                        "sweep passes; each size keeps its fastest pass")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--kernels", bench.kernels, "kernels to measure")->delimiter(',');
  bench_cmd->add_option("--csv", bench.csv, "write a CSV report to this path");
  bench_cmd->add_option("--plot", bench.plot, "write an SVG throughput plot to this path");

  try {
    app.parse(argc, argv);

    if (app.got_subcommand(fix_cmd)) {
      if (!fix.in_place && fix.output.empty())
        throw CLI::RequiredError("fix: one of --in-place or --output");
      return cmd_fix(fix);
    }
    if (app.got_subcommand(check_cmd)) return cmd_check(check);
    if (app.got_subcommand(gen_cmd)) return cmd_generate(gen);
    if (app.got_subcommand(bench_cmd)) return cmd_bench(bench);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "utf16mend: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
