// Reference kernels: plain u64 arithmetic, valid for any p ≤ 2^20.
#include "liecrown/gfp.hpp"

namespace liecrown::kernels {

namespace {

void axpy_scalar(u32* dst, const u32* src, u32 c, std::size_t n, u32 p, u32) {
    if (c == 0) return;
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = static_cast<u32>((u64(c) * src[i] + dst[i]) % p);
}

void scale_scalar(u32* dst, u32 c, std::size_t n, u32 p, u32) {
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = static_cast<u32>(u64(c) * dst[i] % p);
}

}  // namespace

const RowKernels scalar{axpy_scalar, scale_scalar, "scalar"};

}  // namespace liecrown::kernels
