#pragma once

// Quadratic (Cremona) transformations at the divisor-class level: single
// transforms, replayable reduction chains, and splitting of fixed
// (-1)-curves out of a system.
//
// Transforms never permute point indices; a transform based at (i, j, k)
// rewrites exactly those three multiplicities and the degree.

#include <string>
#include <vector>

#include "nonef/lattice.hpp"

namespace nonef {

struct QuadTransform {
    std::size_t i = 0, j = 0, k = 0;

    bool operator==(const QuadTransform&) const = default;
};

struct TransformLog {
    std::vector<QuadTransform> steps;

    bool empty() const { return steps.empty(); }
    std::size_t size() const { return steps.size(); }

    // Line-oriented text format, one "q i j k" per step.
    std::string to_text() const;
    static TransformLog from_text(const std::string& text);

    bool operator==(const TransformLog&) const = default;
};

// degree' = 2d - m_i - m_j - m_k, m_i' = d - m_j - m_k (cyclically), other
// entries untouched.  Involutive.  Throws std::domain_error on bad indices.
DivisorClass quadratic_transform(const DivisorClass& a, const QuadTransform& t);

// Reversed log: applying `log` then `reversed(log)` is the identity.
TransformLog reversed(const TransformLog& log);

// Composite image of `a` under every step of the log, in order.
DivisorClass image_under_log(const DivisorClass& a, const TransformLog& log);

enum class ChainStrategy {
    // Base at index 0 plus successive fresh pairs (1,2), (3,4), ...;
    // requires an odd multiplicity count 2n+1 and runs exactly n steps.
    FirstPointPairs,
    // Transform at the three largest multiplicities (ties by lowest index)
    // while the degree is smaller than their sum.
    Greedy,
};

struct ChainResult {
    DivisorClass terminal;
    TransformLog log;
};

// Throws std::runtime_error if a greedy reduction exceeds the step bound
// 10*n + 100 (the degree strictly decreases on valid input, so the bound
// only trips on misuse).
ChainResult reduce_chain(const DivisorClass& a, ChainStrategy strategy);

struct SplitResult {
    i64 multiplicity = 0;
    DivisorClass residual;
};

// Splits the (-1)-class `c` out of `a`: multiplicity = max(0, -a.c),
// residual = a - multiplicity*c.  Requires is_minus_one_class(c); the
// splitting count formula is meaningless otherwise.
SplitResult split_curve(const DivisorClass& a, const DivisorClass& c);

}  // namespace nonef
