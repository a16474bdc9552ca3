// Prime fields GF(p) with exact modular arithmetic and runtime-dispatched
// row kernels (scalar reference everywhere; AVX2/NEON when available).
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace liecrown {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Row kernels operating on canonical scalars in [0, p). `barrett` is
// floor(2^32 / p), used only by the vectorized paths (they require p < 2^16
// so that a*x + y stays below 2^32).
struct RowKernels {
    // dst[i] = (dst[i] + c * src[i]) mod p
    void (*axpy)(u32* dst, const u32* src, u32 c, std::size_t n, u32 p, u32 barrett);
    // dst[i] = (c * dst[i]) mod p
    void (*scale)(u32* dst, u32 c, std::size_t n, u32 p, u32 barrett);
    const char* name;
};

namespace kernels {
extern const RowKernels scalar;
#if defined(LIECROWN_HAVE_AVX2)
extern const RowKernels avx2;
bool cpu_supports_avx2() noexcept;
#endif
#if defined(LIECROWN_HAVE_NEON)
extern const RowKernels neon;
#endif
// Best kernels usable for modulus p on this machine.
const RowKernels& select(u32 p) noexcept;
}  // namespace kernels

// A prime field. Scalars are machine integers reduced to [0, p); p ≤ 2^20 so
// enumeration loops and u64 products never overflow.
class PrimeField {
public:
    explicit PrimeField(u32 p);

    u32 p() const { return p_; }
    u32 barrett() const { return barrett_; }
    const RowKernels& kernels() const { return *kernels_; }

    u32 reduce(u64 x) const { return static_cast<u32>(x % p_); }
    u32 reduce_signed(std::int64_t x) const {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<u32>(r);
    }
    u32 add(u32 a, u32 b) const {
        u32 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p_ - b; }
    u32 neg(u32 a) const { return a == 0 ? 0 : p_ - a; }
    u32 mul(u32 a, u32 b) const { return static_cast<u32>((u64(a) * b) % p_); }
    u32 pow(u32 a, u64 e) const;
    u32 inv(u32 a) const;  // a != 0

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

    static bool is_prime(u32 n);

private:
    u32 p_;
    u32 barrett_;
    const RowKernels* kernels_;
};

// dst += c * src over GF(p), length n (dispatched).
inline void row_axpy(const PrimeField& F, u32* dst, const u32* src, u32 c, std::size_t n) {
    F.kernels().axpy(dst, src, c, n, F.p(), F.barrett());
}
inline void row_scale(const PrimeField& F, u32* dst, u32 c, std::size_t n) {
    F.kernels().scale(dst, c, n, F.p(), F.barrett());
}

}  // namespace liecrown
