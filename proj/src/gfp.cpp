#include "liecrown/gfp.hpp"

#include <string>

namespace liecrown {

bool PrimeField::is_prime(u32 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u32 d = 3; u64(d) * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(u32 p) : p_(p) {
    if (p < 2 || p > (u32(1) << 20) || !is_prime(p))
        throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                    " is not a prime in [2, 2^20]");
    barrett_ = p < (u32(1) << 16) ? static_cast<u32>((u64(1) << 32) / p) : 0;
    kernels_ = &kernels::select(p);
}

u32 PrimeField::pow(u32 a, u64 e) const {
    u64 base = a % p_, acc = 1;
    while (e) {
        if (e & 1) acc = acc * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<u32>(acc);
}

u32 PrimeField::inv(u32 a) const {
    if (a == 0) throw std::domain_error("PrimeField::inv(0)");
    return pow(a, p_ - 2);
}

namespace kernels {

const RowKernels& select(u32 p) noexcept {
#if defined(LIECROWN_HAVE_AVX2)
    if (p < (u32(1) << 16) && cpu_supports_avx2()) return avx2;
#endif
#if defined(LIECROWN_HAVE_NEON)
    if (p < (u32(1) << 16)) return neon;
#endif
    (void)p;
    return scalar;
}

}  // namespace kernels

}  // namespace liecrown
