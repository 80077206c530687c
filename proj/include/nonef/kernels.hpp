#pragma once

// Data-parallel inner loops of the modular elimination, with a scalar
// reference kernel and an AVX2 variant selected at runtime.  The two are
// equivalence-tested bit-for-bit; certificates never depend on which one
// ran.
//
// Selection order: NONEF_KERNEL env var ("scalar"/"avx2") if set, else the
// best variant the CPU supports.

#include <cstddef>
#include <cstdint>

namespace nonef::kern {

using u64 = std::uint64_t;

// dst[i] <- (dst[i] - f*src[i]) mod p for i in [0, n).
// Preconditions: entries and f in [0, p), p an odd prime < 2^62,
// f_shoup = floor(f * 2^64 / p).
using row_submul_fn = void (*)(u64* dst, const u64* src, std::size_t n, u64 f, u64 f_shoup, u64 p);

void row_submul_scalar(u64* dst, const u64* src, std::size_t n, u64 f, u64 f_shoup, u64 p);
#if defined(__x86_64__)
void row_submul_avx2(u64* dst, const u64* src, std::size_t n, u64 f, u64 f_shoup, u64 p);
#endif

// The active kernel (runtime-dispatched, cached after first query).
row_submul_fn row_submul();
const char* active_name();

// Force a specific variant ("scalar", "avx2", "auto"); throws
// std::invalid_argument for unknown names or unsupported variants.
void force(const char* name);

bool avx2_supported();

}  // namespace nonef::kern
