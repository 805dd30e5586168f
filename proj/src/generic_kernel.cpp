#include "utf16mend/generic_kernel.hpp"

#include <cassert>

namespace utf16mend {

void fix_block_generic(char16_t* out, const char16_t* in, unsigned lanes,
                       bool in_place) {
  switch (lanes) {
    case 4: fix_block_generic<4>(out, in, in_place); break;
    case 8: fix_block_generic<8>(out, in, in_place); break;
    case 16: fix_block_generic<16>(out, in, in_place); break;
    case 32: fix_block_generic<32>(out, in, in_place); break;
    default: assert(!"unsupported lane count"); break;
  }
}

void fix_stream_generic(std::span<const char16_t> in, std::span<char16_t> out,
                        unsigned lanes) {
  assert(in.size() == out.size());
  switch (lanes) {
    case 4: fix_stream_generic_w<4>(out.data(), in.data(), in.size()); break;
    case 8: fix_stream_generic_w<8>(out.data(), in.data(), in.size()); break;
    case 16: fix_stream_generic_w<16>(out.data(), in.data(), in.size()); break;
    case 32: fix_stream_generic_w<32>(out.data(), in.data(), in.size()); break;
    default: assert(!"unsupported lane count"); break;
  }
}

}  // namespace utf16mend
