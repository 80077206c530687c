#pragma once

// Arithmetic mod a 62-bit prime, a deterministic RNG, and random prime
// generation.  Everything here is platform-independent by construction:
// the RNG is a hand-rolled xoshiro256** (std distributions are not
// reproducible across standard libraries) and bounded sampling uses
// Lemire rejection.  Certificates depend on this determinism.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nonef::fp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// ---------------------------------------------------------------------------
// scalar field ops (p < 2^63)
// ---------------------------------------------------------------------------

inline u64 add_mod(u64 a, u64 b, u64 p) {
    u64 r = a + b;
    return r >= p ? r - p : r;
}

inline u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 neg_mod(u64 a, u64 p) { return a ? p - a : 0; }

inline u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p);

// Inverse mod a prime via Fermat.  Throws std::domain_error on 0.
u64 inv_mod(u64 a, u64 p);

// Precomputed-quotient (Shoup) multiplication: mul_shoup(x, f, fs, p) equals
// x*f mod p for any x in [0, p) given fs = floor(f * 2^64 / p).  Used by the
// elimination kernels where f is fixed across a whole row.
inline u64 shoup_precompute(u64 f, u64 p) { return static_cast<u64>((u128(f) << 64) / p); }

inline u64 mul_shoup(u64 x, u64 f, u64 f_shoup, u64 p) {
    u64 q = static_cast<u64>((u128(x) * f_shoup) >> 64);
    u64 r = x * f - q * p;  // wraparound intended; r < 2p
    return r >= p ? r - p : r;
}

// ---------------------------------------------------------------------------
// deterministic RNG
// ---------------------------------------------------------------------------

u64 splitmix64(u64& state);

// xoshiro256**, seeded through splitmix64.  Fixed algorithm, fixed output
// for a given seed on every platform and build.
class Rng {
  public:
    explicit Rng(u64 seed);

    u64 next();

    // Uniform in [0, bound), bound >= 1, via Lemire rejection.
    u64 below(u64 bound);

    // Uniform nonzero field element / uniform field element.
    u64 field_elem(u64 p) { return below(p); }
    u64 field_elem_nonzero(u64 p) { return 1 + below(p - 1); }

    // Derived stream: deterministic function of the current seed and the
    // tag, independent of draws made from this stream afterwards.
    Rng fork(const std::string& tag) const;

  private:
    std::array<u64, 4> s_;
    u64 seed_;
};

// FNV-1a, used for stream forking tags.
u64 hash64(const std::string& text);

// ---------------------------------------------------------------------------
// primes
// ---------------------------------------------------------------------------

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(u64 n);

// Uniform random prime in [2^61, 2^62).
u64 random_prime_62(Rng& rng);

}  // namespace nonef::fp
