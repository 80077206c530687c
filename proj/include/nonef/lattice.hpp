#pragma once

// Exact arithmetic in the Picard lattice of a blown-up plane: divisor
// classes in the basis (L, E_1..E_n), the intersection pairing, canonical
// class, virtual dimension, and the xi_{d,m} family of square-zero classes.
//
// Everything is done in checked signed 64-bit integers; overflow throws
// std::overflow_error, never wraps.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nonef {

using i64 = std::int64_t;

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("lattice: add overflow");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("lattice: sub overflow");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("lattice: mul overflow");
    return r;
}

// A divisor class degree*L - sum_i mults[i]*E_i on the plane blown up at
// mults.size() points.  Entries may be zero or negative; nothing is clamped.
struct DivisorClass {
    i64 degree = 0;
    std::vector<i64> mults;

    DivisorClass() = default;
    DivisorClass(i64 deg, std::vector<i64> m) : degree(deg), mults(std::move(m)) {}

    std::size_t points() const { return mults.size(); }
    bool operator==(const DivisorClass&) const = default;
};

// Componentwise ring operations.  Combining classes on different blow-ups is
// a structural error; pad explicitly with `padded` first.
DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator*(i64 c, const DivisorClass& a);

// Copy of `a` with the multiplicity vector zero-extended to n entries.
DivisorClass padded(const DivisorClass& a, std::size_t n);

// a.degree*b.degree - sum a.mults[i]*b.mults[i].  Throws on length mismatch.
i64 intersect(const DivisorClass& a, const DivisorClass& b);

// K = (-3; -1^n).
DivisorClass canonical_class(std::size_t n);

// d(d+3)/2 - sum_{m_i >= 1} m_i(m_i+1)/2.  Non-positive multiplicities
// impose no conditions and are skipped.  May be far below -1.
i64 virtual_dim(const DivisorClass& a);

// Numerical (-1)-class test: a.a == -1 and a.K == -1.  Irreducibility is an
// assumption of the callers, not checked here.
bool is_minus_one_class(const DivisorClass& a);

// Parameters of the class xi_{d,m}: degree-d curves with one point of
// multiplicity d-m and m(2d-m) simple points, taken k times.
struct XiParams {
    i64 d = 1;
    i64 m = 0;
    i64 k = 1;

    i64 simple_points() const { return checked_mul(m, checked_sub(checked_mul(2, d), m)); }
};

// (k*d; k(d-m), k^{m(2d-m)}).  Self-intersection is 0 by construction.
// Throws std::domain_error unless d >= 1, 0 <= m <= d, k >= 1.
DivisorClass xi_class(const XiParams& p);

// The unique (-1)-curve class (n; n-1, 1^{2n}) on 2n+1 points.
DivisorClass minus_one_curve_C(i64 n);

// Multiplicities sorted descending with zeros removed; degree unchanged.
// Two classes related by reindexing/padding compare equal after this.
DivisorClass normalized(const DivisorClass& a);

// Equality up to reindexing and zero-padding of the multiplicities.
bool same_system(const DivisorClass& a, const DivisorClass& b);

}  // namespace nonef
