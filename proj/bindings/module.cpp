// Python bindings. Buffers cross the boundary as raw UTF-16LE bytes; a BOM,
// if present, is just an ordinary (non-surrogate) code unit here.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "utf16mend/codec.hpp"
#include "utf16mend/datagen.hpp"
#include "utf16mend/driver.hpp"
#include "utf16mend/surrogate.hpp"

namespace py = pybind11;

namespace {

using namespace utf16mend;

std::vector<char16_t> units_from_bytes(std::string_view data) {
  if (data.size() % 2 != 0)
    throw py::value_error("UTF-16 byte string must have an even length");
  std::vector<char16_t> units(data.size() / 2);
  for (std::size_t i = 0; i < units.size(); i++)
    units[i] = load_unit(reinterpret_cast<const std::uint8_t*>(data.data()) + 2 * i,
                         endianness::little);
  return units;
}

py::bytes bytes_from_units(const std::vector<char16_t>& units) {
  std::string data(2 * units.size(), '\0');
  for (std::size_t i = 0; i < units.size(); i++)
    store_unit(reinterpret_cast<std::uint8_t*>(data.data()) + 2 * i, units[i],
               endianness::little);
  return py::bytes(data);
}

std::optional<kernel_id> kernel_from_name(const std::optional<std::string>& name) {
  if (!name) return std::nullopt;
  const auto id = parse_kernel_id(*name);
  if (!id) throw py::value_error("unknown kernel '" + *name + "'");
  return id;
}

}  // namespace

PYBIND11_MODULE(_utf16mend, m) {
  m.doc() = "Repair ill-formed UTF-16 by replacing mismatched surrogates with U+FFFD.";

  m.def(
      "fix_utf16le",
      [](const py::bytes& data, const std::optional<std::string>& kernel) {
        const auto in = units_from_bytes(std::string_view(data));
        std::vector<char16_t> out(in.size());
        to_well_formed(in, out, kernel_from_name(kernel));
        return bytes_from_units(out);
      },
      py::arg("data"), py::arg("kernel") = py::none(),
      "Return `data` (raw UTF-16LE code units) with every unpaired surrogate "
      "replaced by U+FFFD.");

  m.def(
      "is_well_formed_utf16le",
      [](const py::bytes& data) { return is_well_formed(units_from_bytes(std::string_view(data))); },
      py::arg("data"),
      "True if `data` (raw UTF-16LE code units) contains no unpaired surrogate.");

  m.def(
      "unpaired_surrogate_offsets",
      [](const py::bytes& data, std::size_t limit) {
        return unpaired_surrogate_offsets(units_from_bytes(std::string_view(data)), limit);
      },
      py::arg("data"), py::arg("limit") = SIZE_MAX,
      "Unit offsets that fixing would rewrite, capped at `limit`.");

  m.def(
      "generate_utf16le",
      [](std::size_t units, double pair_pct, double mismatch_pct, std::uint64_t seed) {
        if (pair_pct < 0.0 || pair_pct > 1.0 || mismatch_pct < 0.0 || mismatch_pct > 1.0)
          throw py::value_error("pair_pct and mismatch_pct must be within [0, 1]");
        return bytes_from_units(generate({.length_units = units,
                                          .pair_pct = pair_pct,
                                          .mismatch_pct = mismatch_pct,
                                          .seed = seed}));
      },
      py::arg("units"), py::arg("pair_pct") = 0.0, py::arg("mismatch_pct") = 0.0,
      py::arg("seed") = 0,
      "Deterministic random UTF-16LE with the given valid-pair and lone-surrogate "
      "unit fractions.");

  m.def(
      "available_kernels",
      [] {
        std::vector<std::string> names;
        for (const kernel_id& id : available_kernels()) names.push_back(to_string(id));
        return names;
      },
      "Names of every repair kernel selectable on this host.");

  m.def(
      "default_kernel", [] { return to_string(select_kernel()); },
      "Kernel the driver picks on this host (honours UTF16MEND_KERNEL).");
}
