#include "nonef/lattice.hpp"

#include <algorithm>

namespace nonef {

namespace {

void require_same_points(const DivisorClass& a, const DivisorClass& b) {
    if (a.points() != b.points())
        throw std::invalid_argument("lattice: classes live on different blow-ups (" +
                                    std::to_string(a.points()) + " vs " +
                                    std::to_string(b.points()) + " points); pad explicitly");
}

}  // namespace

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    require_same_points(a, b);
    DivisorClass r(checked_add(a.degree, b.degree), a.mults);
    for (std::size_t i = 0; i < r.mults.size(); ++i) r.mults[i] = checked_add(r.mults[i], b.mults[i]);
    return r;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    require_same_points(a, b);
    DivisorClass r(checked_sub(a.degree, b.degree), a.mults);
    for (std::size_t i = 0; i < r.mults.size(); ++i) r.mults[i] = checked_sub(r.mults[i], b.mults[i]);
    return r;
}

DivisorClass operator*(i64 c, const DivisorClass& a) {
    DivisorClass r(checked_mul(c, a.degree), a.mults);
    for (auto& m : r.mults) m = checked_mul(c, m);
    return r;
}

DivisorClass padded(const DivisorClass& a, std::size_t n) {
    if (n < a.points()) throw std::invalid_argument("lattice: padded() cannot shrink a class");
    DivisorClass r = a;
    r.mults.resize(n, 0);
    return r;
}

i64 intersect(const DivisorClass& a, const DivisorClass& b) {
    require_same_points(a, b);
    i64 acc = checked_mul(a.degree, b.degree);
    for (std::size_t i = 0; i < a.mults.size(); ++i)
        acc = checked_sub(acc, checked_mul(a.mults[i], b.mults[i]));
    return acc;
}

DivisorClass canonical_class(std::size_t n) {
    return DivisorClass(-3, std::vector<i64>(n, -1));
}

i64 virtual_dim(const DivisorClass& a) {
    // d(d+3)/2: one factor is always even.
    i64 d = a.degree;
    i64 acc = (d % 2 == 0) ? checked_mul(d / 2, checked_add(d, 3))
                           : checked_mul(d, checked_add(d, 3) / 2);
    for (i64 m : a.mults) {
        if (m < 1) continue;
        i64 cond = (m % 2 == 0) ? checked_mul(m / 2, m + 1) : checked_mul(m, (m + 1) / 2);
        acc = checked_sub(acc, cond);
    }
    return acc;
}

bool is_minus_one_class(const DivisorClass& a) {
    if (intersect(a, a) != -1) return false;
    return intersect(a, canonical_class(a.points())) == -1;
}

DivisorClass xi_class(const XiParams& p) {
    if (p.d < 1) throw std::domain_error("xi: d must be >= 1");
    if (p.m < 0 || p.m > p.d) throw std::domain_error("xi: need 0 <= m <= d");
    if (p.k < 1) throw std::domain_error("xi: k must be >= 1");
    i64 simple = p.simple_points();
    std::vector<i64> mults;
    mults.reserve(static_cast<std::size_t>(simple) + 1);
    mults.push_back(checked_mul(p.k, checked_sub(p.d, p.m)));
    for (i64 i = 0; i < simple; ++i) mults.push_back(p.k);
    return DivisorClass(checked_mul(p.k, p.d), std::move(mults));
}

DivisorClass minus_one_curve_C(i64 n) {
    if (n < 1) throw std::domain_error("minus_one_curve_C: n must be >= 1");
    std::vector<i64> mults;
    mults.reserve(static_cast<std::size_t>(2 * n) + 1);
    mults.push_back(n - 1);
    for (i64 i = 0; i < 2 * n; ++i) mults.push_back(1);
    return DivisorClass(n, std::move(mults));
}

DivisorClass normalized(const DivisorClass& a) {
    DivisorClass r = a;
    std::sort(r.mults.begin(), r.mults.end(), std::greater<i64>());
    std::erase(r.mults, 0);
    return r;
}

bool same_system(const DivisorClass& a, const DivisorClass& b) {
    return normalized(a) == normalized(b);
}

}  // namespace nonef
