#pragma once

// Polynomial / truncated power series arithmetic over F_p.
//
// UPoly is a dense univariate polynomial (coefficient i = power i).
// BiSeries is a bivariate series in (u, w) truncated at total degree
// `trunc`, stored by total-degree blocks.  These carry the local jet
// computations behind infinitely-near point conditions.

#include <cstdint>
#include <vector>

#include "nonef/modarith.hpp"

namespace nonef {

using u64 = std::uint64_t;

// ---------------------------------------------------------------------------
// univariate
// ---------------------------------------------------------------------------

struct UPoly {
    std::vector<u64> c;  // c[i] * t^i

    UPoly() = default;
    explicit UPoly(std::vector<u64> coeffs) : c(std::move(coeffs)) {}

    bool is_zero() const;
    int degree() const;  // -1 for the zero polynomial
    void trim();
};

UPoly up_add(const UPoly& a, const UPoly& b, u64 p);
UPoly up_sub(const UPoly& a, const UPoly& b, u64 p);
UPoly up_mul(const UPoly& a, const UPoly& b, u64 p);
UPoly up_scale(const UPoly& a, u64 s, u64 p);
u64 up_eval(const UPoly& a, u64 t, u64 p);
UPoly up_derivative(const UPoly& a, u64 p);

// Monic gcd via Euclid.
UPoly up_gcd(UPoly a, UPoly b, u64 p);

// Quotient and remainder; b must be nonzero.
void up_divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r, u64 p);

// Exact division; throws std::domain_error if the remainder is nonzero.
UPoly up_divexact(const UPoly& a, const UPoly& b, u64 p);

// a(t0 + u) as a polynomial in u.
UPoly up_shift(const UPoly& a, u64 t0, u64 p);

// Inverse of a mod u^n (a[0] != 0 required).
UPoly up_series_inv(const UPoly& a, std::size_t n, u64 p);

UPoly up_mul_trunc(const UPoly& a, const UPoly& b, std::size_t n, u64 p);

// All roots of `a` in F_p (each once, sorted ascending), via x^p - x
// splitting and equal-degree factorization.  `a` nonzero.
std::vector<u64> up_roots(const UPoly& a, u64 p, fp::Rng& rng);

// ---------------------------------------------------------------------------
// bivariate, truncated at total degree `trunc`
// ---------------------------------------------------------------------------

struct BiSeries {
    int trunc = 0;
    std::vector<u64> c;  // blocks s = 0..trunc, entry (a=s-b, b) at s(s+1)/2 + b

    BiSeries() = default;
    explicit BiSeries(int t) : trunc(t), c(std::size_t(t + 1) * (t + 2) / 2, 0) {}

    static std::size_t index(int s, int b) { return std::size_t(s) * (s + 1) / 2 + b; }

    u64 get(int a, int b) const {
        int s = a + b;
        return (a < 0 || b < 0 || s > trunc) ? 0 : c[index(s, b)];
    }
    void set(int a, int b, u64 v) {
        int s = a + b;
        if (a >= 0 && b >= 0 && s <= trunc) c[index(s, b)] = v;
    }
};

BiSeries bi_mul(const BiSeries& x, const BiSeries& y, u64 p);

// Series with value f(u) + lin_w * w, f given as a u-polynomial.
BiSeries bi_from_u_series(const UPoly& f, u64 lin_w, int trunc, u64 p);

BiSeries bi_one(int trunc);

}  // namespace nonef
