#include "nonef/modarith.hpp"

namespace nonef::fp {

u64 pow_mod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 inv_mod(u64 a, u64 p) {
    a %= p;
    if (a == 0) throw std::domain_error("inv_mod: zero is not invertible");
    return pow_mod(a, p - 2, p);
}

u64 splitmix64(u64& state) {
    u64 z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rng::Rng(u64 seed) : seed_(seed) {
    u64 st = seed;
    for (auto& w : s_) w = splitmix64(st);
}

u64 Rng::next() {
    auto rotl = [](u64 x, int k) { return (x << k) | (x >> (64 - k)); };
    u64 result = rotl(s_[1] * 5, 7) * 9;
    u64 t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

u64 Rng::below(u64 bound) {
    if (bound == 0) throw std::domain_error("Rng::below: bound must be >= 1");
    u128 m = u128(next()) * bound;
    u64 lo = static_cast<u64>(m);
    if (lo < bound) {
        u64 threshold = (0 - bound) % bound;
        while (lo < threshold) {
            m = u128(next()) * bound;
            lo = static_cast<u64>(m);
        }
    }
    return static_cast<u64>(m >> 64);
}

Rng Rng::fork(const std::string& tag) const {
    return Rng(seed_ ^ hash64(tag));
}

u64 hash64(const std::string& text) {
    u64 h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses decide primality for all n < 2^64.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 random_prime_62(Rng& rng) {
    constexpr u64 lo = 1ULL << 61, hi = 1ULL << 62;
    for (;;) {
        u64 c = lo + rng.below(hi - lo);
        c |= 1;
        if (is_prime(c)) return c;
    }
}

}  // namespace nonef::fp
