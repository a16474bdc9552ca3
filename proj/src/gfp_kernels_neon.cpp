// NEON kernels for p < 2^16: widen to u32 pairs, reduce via u64 modulo on
// extracted lanes is not profitable at these widths, so use umull + Barrett
// in 32-bit lanes (t = a*x + y < 2^32, same bound as the AVX2 path).
#include "liecrown/gfp.hpp"

#if defined(LIECROWN_HAVE_NEON)
#include <arm_neon.h>

namespace liecrown::kernels {

namespace {

inline uint32x4_t barrett_reduce(uint32x4_t t, uint32x4_t pv, uint32x4_t mv) {
    uint64x2_t lo = vmull_u32(vget_low_u32(t), vget_low_u32(mv));
    uint64x2_t hi = vmull_u32(vget_high_u32(t), vget_high_u32(mv));
    uint32x4_t q = vcombine_u32(vshrn_n_u64(lo, 32), vshrn_n_u64(hi, 32));
    uint32x4_t r = vsubq_u32(t, vmulq_u32(q, pv));
    return vminq_u32(r, vsubq_u32(r, pv));
}

void axpy_neon(u32* dst, const u32* src, u32 c, std::size_t n, u32 p, u32 barrett) {
    if (c == 0) return;
    const uint32x4_t cv = vdupq_n_u32(c);
    const uint32x4_t pv = vdupq_n_u32(p);
    const uint32x4_t mv = vdupq_n_u32(barrett);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        uint32x4_t x = vld1q_u32(src + i);
        uint32x4_t y = vld1q_u32(dst + i);
        uint32x4_t t = vaddq_u32(vmulq_u32(cv, x), y);
        vst1q_u32(dst + i, barrett_reduce(t, pv, mv));
    }
    for (; i < n; ++i)
        dst[i] = static_cast<u32>((u64(c) * src[i] + dst[i]) % p);
}

void scale_neon(u32* dst, u32 c, std::size_t n, u32 p, u32 barrett) {
    const uint32x4_t cv = vdupq_n_u32(c);
    const uint32x4_t pv = vdupq_n_u32(p);
    const uint32x4_t mv = vdupq_n_u32(barrett);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        uint32x4_t t = vmulq_u32(cv, vld1q_u32(dst + i));
        vst1q_u32(dst + i, barrett_reduce(t, pv, mv));
    }
    for (; i < n; ++i)
        dst[i] = static_cast<u32>(u64(c) * dst[i] % p);
}

}  // namespace

const RowKernels neon{axpy_neon, scale_neon, "neon"};

}  // namespace liecrown::kernels

#endif  // LIECROWN_HAVE_NEON
