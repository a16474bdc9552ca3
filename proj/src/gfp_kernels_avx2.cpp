// AVX2 kernels for p < 2^16. With a, x, y < p < 2^16, t = a*x + y < 2^32, so
// 32-bit lanes never wrap; Barrett reduction with M = floor(2^32/p) gives
// r = t - floor(t*M/2^32)*p < 2p, fixed by one conditional subtract.
#include "liecrown/gfp.hpp"

#include <immintrin.h>

namespace liecrown::kernels {

namespace {

// High 32 bits of lane-wise 32x32 products t*M.
inline __m256i mulhi_u32(__m256i t, __m256i m) {
    __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(t, m), 32);
    __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(t, 32), m);
    odd = _mm256_and_si256(odd, _mm256_set1_epi64x(static_cast<long long>(0xFFFFFFFF00000000ull)));
    return _mm256_or_si256(even, odd);
}

// t mod p for t < 2^32 in each lane.
inline __m256i barrett_reduce(__m256i t, __m256i pv, __m256i mv) {
    __m256i q = mulhi_u32(t, mv);
    __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(q, pv));
    return _mm256_min_epu32(r, _mm256_sub_epi32(r, pv));
}

void axpy_avx2(u32* dst, const u32* src, u32 c, std::size_t n, u32 p, u32 barrett) {
    if (c == 0) return;
    const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i mv = _mm256_set1_epi32(static_cast<int>(barrett));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
        __m256i t = _mm256_add_epi32(_mm256_mullo_epi32(cv, x), y);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), barrett_reduce(t, pv, mv));
    }
    for (; i < n; ++i)
        dst[i] = static_cast<u32>((u64(c) * src[i] + dst[i]) % p);
}

void scale_avx2(u32* dst, u32 c, std::size_t n, u32 p, u32 barrett) {
    const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i mv = _mm256_set1_epi32(static_cast<int>(barrett));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
        __m256i t = _mm256_mullo_epi32(cv, x);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), barrett_reduce(t, pv, mv));
    }
    for (; i < n; ++i)
        dst[i] = static_cast<u32>(u64(c) * dst[i] % p);
}

}  // namespace

bool cpu_supports_avx2() noexcept {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const RowKernels avx2{axpy_avx2, scale_avx2, "avx2"};

}  // namespace liecrown::kernels
