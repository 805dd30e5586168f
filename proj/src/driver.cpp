#include "utf16mend/driver.hpp"

#include <cassert>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "utf16mend/bitmask_kernel.hpp"
#include "utf16mend/bytesplit_kernel.hpp"
#include "utf16mend/generic_kernel.hpp"
#include "utf16mend/surrogate.hpp"

namespace utf16mend {

std::string to_string(const kernel_id& id) {
  switch (id.kind) {
    case kernel_kind::scalar: return "scalar";
    case kernel_kind::generic: return "generic" + std::to_string(id.lanes);
    case kernel_kind::bitmask: return id.emulated ? "bitmask-emulated" : "bitmask";
    case kernel_kind::bytesplit: return id.emulated ? "bytesplit-emulated" : "bytesplit";
  }
  return "?";
}

std::optional<kernel_id> parse_kernel_id(std::string_view name) {
  if (name == "scalar") return kernel_id::scalar();
  if (name == "generic") return kernel_id::generic();
  if (name == "generic4") return kernel_id::generic(4);
  if (name == "generic8") return kernel_id::generic(8);
  if (name == "generic16") return kernel_id::generic(16);
  if (name == "generic32") return kernel_id::generic(32);
  if (name == "bitmask") return kernel_id::bitmask();
  if (name == "bitmask-emulated") return kernel_id::bitmask(true);
  if (name == "bytesplit") return kernel_id::bytesplit();
  if (name == "bytesplit-emulated") return kernel_id::bytesplit(true);
  return std::nullopt;
}

cpu_features detect_cpu_features() {
  return {
      .wide_mask_registers = bitmask_native_supported(),
      .byte_deinterleave = bytesplit_native_supported(),
  };
}

bool kernel_supported(const kernel_id& id, const cpu_features& features) {
  switch (id.kind) {
    case kernel_kind::scalar: return true;
    case kernel_kind::generic: return generic_lanes_supported(id.lanes);
    case kernel_kind::bitmask: return id.emulated || features.wide_mask_registers;
    case kernel_kind::bytesplit: return id.emulated || features.byte_deinterleave;
  }
  return false;
}

std::vector<kernel_id> available_kernels(const cpu_features& features) {
  std::vector<kernel_id> ids;
  ids.push_back(kernel_id::scalar());
  for (unsigned lanes : {4u, 8u, 16u, 32u}) ids.push_back(kernel_id::generic(lanes));
  if (features.wide_mask_registers) ids.push_back(kernel_id::bitmask());
  ids.push_back(kernel_id::bitmask(true));
  if (features.byte_deinterleave) ids.push_back(kernel_id::bytesplit());
  ids.push_back(kernel_id::bytesplit(true));
  return ids;
}

std::vector<kernel_id> available_kernels() {
  return available_kernels(detect_cpu_features());
}

kernel_id select_kernel(const std::optional<kernel_id>& override_id,
                        const cpu_features& features) {
  if (override_id) {
    if (kernel_supported(*override_id, features)) return *override_id;
    switch (override_id->kind) {
      case kernel_kind::bitmask:
        throw std::invalid_argument(
            "kernel 'bitmask' requires 512-bit vectors with mask registers "
            "(AVX-512F/BW), which this host does not report");
      case kernel_kind::bytesplit:
        throw std::invalid_argument(
            "kernel 'bytesplit' requires NEON deinterleaving loads, which "
            "this host does not report");
      default:
        throw std::invalid_argument("generic kernel lane count must be 4, 8, 16, or 32");
    }
  }
  if (features.wide_mask_registers) return kernel_id::bitmask();
  if (features.byte_deinterleave) return kernel_id::bytesplit();
  return kernel_id::generic(8);
}

kernel_id select_kernel(const std::optional<kernel_id>& override_id) {
  static const cpu_features host = detect_cpu_features();
  if (override_id) return select_kernel(override_id, host);

  static const kernel_id chosen = [] {
    if (const char* env = std::getenv("UTF16MEND_KERNEL")) {
      const auto id = parse_kernel_id(env);
      if (id && kernel_supported(*id, host)) return *id;
      std::fprintf(stderr,
                   "utf16mend: ignoring UTF16MEND_KERNEL=%s (%s); using default\n",
                   env, id ? "unsupported on this host" : "unknown kernel name");
    }
    return select_kernel(std::nullopt, host);
  }();
  return chosen;
}

namespace {

void dispatch(const kernel_id& id, std::span<const char16_t> in,
              std::span<char16_t> out) {
  switch (id.kind) {
    case kernel_kind::scalar:
      fix_scalar(in, out);
      break;
    case kernel_kind::generic:
      fix_stream_generic(in, out, id.lanes);
      break;
    case kernel_kind::bitmask:
      fix_stream_bitmask(in, out,
                         id.emulated ? bitmask_backend::emulated : bitmask_backend::native);
      break;
    case kernel_kind::bytesplit:
      fix_stream_bytesplit(in, out,
                           id.emulated ? bytesplit_backend::emulated
                                       : bytesplit_backend::native);
      break;
  }
}

}  // namespace

void to_well_formed(std::span<const char16_t> in, std::span<char16_t> out,
                    const std::optional<kernel_id>& kernel) {
  if (in.size() != out.size())
    throw std::invalid_argument("to_well_formed: input and output lengths differ");
  assert(in.data() == out.data() || in.data() + in.size() <= out.data() ||
         out.data() + out.size() <= in.data());
  dispatch(select_kernel(kernel), in, out);
}

void to_well_formed_in_place(std::span<char16_t> buffer,
                             const std::optional<kernel_id>& kernel) {
  dispatch(select_kernel(kernel), buffer, buffer);
}

}  // namespace utf16mend
