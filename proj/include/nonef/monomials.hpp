#pragma once

// Shared monomial indexing for plane curves of degree <= D: pairs (i, j)
// with i + j <= D, ordered by total degree, then by descending i.  Affine
// monomial x^i y^j and homogeneous monomial x^i y^j z^(D-i-j) share the
// same index, so interpolation and implicitization agree on layout.

#include <cstdint>
#include <utility>
#include <vector>

namespace nonef {

inline std::int64_t monomial_count(std::int64_t degree) {
    return (degree + 1) * (degree + 2) / 2;
}

inline std::vector<std::pair<int, int>> monomial_pairs(int degree) {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(monomial_count(degree)));
    for (int s = 0; s <= degree; ++s)
        for (int i = s; i >= 0; --i) out.emplace_back(i, s - i);
    return out;
}

}  // namespace nonef
