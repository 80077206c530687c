// AVX2 variant of the elimination row update.  AVX2 has no 64x64 multiply,
// so the 128-bit products behind Shoup multiplication are rebuilt from
// 32x32->64 pieces (_mm256_mul_epu32).  Unsigned 64-bit compares go through
// the usual sign-bias trick.

#include "nonef/kernels.hpp"

#if defined(__x86_64__)

#include <immintrin.h>

namespace nonef::kern {

namespace {

// High 64 bits of the lane-wise 64x64 product.
inline __m256i mulhi_epu64(__m256i a, __m256i b) {
    __m256i a_hi = _mm256_srli_epi64(a, 32);
    __m256i b_hi = _mm256_srli_epi64(b, 32);
    __m256i ll = _mm256_mul_epu32(a, b);
    __m256i lh = _mm256_mul_epu32(a, b_hi);
    __m256i hl = _mm256_mul_epu32(a_hi, b);
    __m256i hh = _mm256_mul_epu32(a_hi, b_hi);

    __m256i lo32 = _mm256_set1_epi64x(0xffffffffLL);
    __m256i mid = _mm256_add_epi64(_mm256_srli_epi64(ll, 32), _mm256_and_si256(lh, lo32));
    mid = _mm256_add_epi64(mid, _mm256_and_si256(hl, lo32));
    __m256i hi = _mm256_add_epi64(hh, _mm256_srli_epi64(lh, 32));
    hi = _mm256_add_epi64(hi, _mm256_srli_epi64(hl, 32));
    return _mm256_add_epi64(hi, _mm256_srli_epi64(mid, 32));
}

// Low 64 bits of the lane-wise 64x64 product.
inline __m256i mullo_epu64(__m256i a, __m256i b) {
    __m256i a_hi = _mm256_srli_epi64(a, 32);
    __m256i b_hi = _mm256_srli_epi64(b, 32);
    __m256i ll = _mm256_mul_epu32(a, b);
    __m256i cross = _mm256_add_epi64(_mm256_mul_epu32(a, b_hi), _mm256_mul_epu32(a_hi, b));
    return _mm256_add_epi64(ll, _mm256_slli_epi64(cross, 32));
}

// a >= b, lane-wise unsigned, as an all-ones mask.
inline __m256i cmpge_epu64(__m256i a, __m256i b) {
    __m256i bias = _mm256_set1_epi64x(static_cast<long long>(0x8000000000000000ULL));
    __m256i lt = _mm256_cmpgt_epi64(_mm256_xor_si256(b, bias), _mm256_xor_si256(a, bias));
    return _mm256_xor_si256(lt, _mm256_set1_epi64x(-1));
}

}  // namespace

void row_submul_avx2(u64* dst, const u64* src, std::size_t n, u64 f, u64 f_shoup, u64 p) {
    const __m256i vf = _mm256_set1_epi64x(static_cast<long long>(f));
    const __m256i vfs = _mm256_set1_epi64x(static_cast<long long>(f_shoup));
    const __m256i vp = _mm256_set1_epi64x(static_cast<long long>(p));

    std::size_t body = n & ~std::size_t(3);
    for (std::size_t i = 0; i < body; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i q = mulhi_epu64(x, vfs);
        __m256i t = _mm256_sub_epi64(mullo_epu64(x, vf), mullo_epu64(q, vp));
        // t < 2p: one conditional subtract.
        __m256i ge = cmpge_epu64(t, vp);
        t = _mm256_sub_epi64(t, _mm256_and_si256(ge, vp));

        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i borrow = cmpge_epu64(d, t);  // no wrap when d >= t
        __m256i r = _mm256_sub_epi64(d, t);
        r = _mm256_add_epi64(r, _mm256_andnot_si256(borrow, vp));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
    }
    if (body < n) row_submul_scalar(dst + body, src + body, n - body, f, f_shoup, p);
}

}  // namespace nonef::kern

#endif  // __x86_64__
