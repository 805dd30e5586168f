#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace utf16mend {

enum class kernel_kind : std::uint8_t { scalar, generic, bitmask, bytesplit };

/// Names one repair implementation. `bitmask` and `bytesplit` denote the
/// native backends and are only selectable on hosts with the matching
/// feature class; their emulated backends are always selectable.
struct kernel_id {
  kernel_kind kind = kernel_kind::generic;
  unsigned lanes = 8;     // generic kernels only
  bool emulated = false;  // bitmask/bytesplit only

  static kernel_id scalar() { return {kernel_kind::scalar, 0, false}; }
  static kernel_id generic(unsigned lanes = 8) { return {kernel_kind::generic, lanes, false}; }
  static kernel_id bitmask(bool emulated = false) { return {kernel_kind::bitmask, 0, emulated}; }
  static kernel_id bytesplit(bool emulated = false) { return {kernel_kind::bytesplit, 0, emulated}; }

  friend bool operator==(const kernel_id&, const kernel_id&) = default;
};

std::string to_string(const kernel_id& id);

/// Accepts "scalar", "generic" (= generic8), "generic4/8/16/32", "bitmask",
/// "bytesplit", and the "-emulated" backend forms of the last two.
std::optional<kernel_id> parse_kernel_id(std::string_view name);

/// Host capabilities relevant to kernel selection, kept behind a value type
/// so tests can simulate arbitrary hosts.
struct cpu_features {
  bool wide_mask_registers = false;  // 512-bit vectors with mask registers
  bool byte_deinterleave = false;    // NEON-class deinterleaving loads
};

cpu_features detect_cpu_features();

bool kernel_supported(const kernel_id& id, const cpu_features& features);

/// Every kernel selectable on a host with `features`.
std::vector<kernel_id> available_kernels(const cpu_features& features);
std::vector<kernel_id> available_kernels();

/// Pick a kernel for an explicit feature report. An unsupported override
/// throws std::invalid_argument naming the missing feature class; without an
/// override the widest supported native kernel wins, generic8 as fallback.
kernel_id select_kernel(const std::optional<kernel_id>& override_id,
                        const cpu_features& features);

/// Host selection. UTF16MEND_KERNEL acts as a soft override when no API
/// override is given (unknown or unsupported values warn and fall back); the
/// resulting default is computed once per process.
kernel_id select_kernel(const std::optional<kernel_id>& override_id = {});

/// Repair `in` into `out` (equal length, disjoint). Equivalent to fix_scalar
/// under every kernel; a length mismatch throws std::invalid_argument.
void to_well_formed(std::span<const char16_t> in, std::span<char16_t> out,
                    const std::optional<kernel_id>& kernel = {});

/// Repair a buffer in place.
void to_well_formed_in_place(std::span<char16_t> buffer,
                             const std::optional<kernel_id>& kernel = {});

}  // namespace utf16mend
