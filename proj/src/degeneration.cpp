#include "nonef/degeneration.hpp"

#include <stdexcept>

namespace nonef {

LimitPair limit_pair_m2(i64 d, i64 k, i64 t) {
    if (d < 4) throw std::domain_error("limit_pair_m2: d must be >= 4");
    if (k < 1) throw std::domain_error("limit_pair_m2: k must be >= 1");
    if (t < 0) throw std::domain_error("limit_pair_m2: t must be >= 0");
    i64 n = d - 1;
    LimitPair pair;
    {
        std::vector<i64> mults{checked_mul(k, n - 1)};
        for (i64 i = 0; i < 2 * n; ++i) mults.push_back(k);
        pair.L_P = DivisorClass(checked_add(checked_mul(k, n), t), std::move(mults));
    }
    {
        std::vector<i64> mults{checked_add(checked_mul(k, n), t)};
        for (i64 i = 0; i < 2 * n; ++i) mults.push_back(k);
        pair.L_F = DivisorClass(checked_mul(k, n + 1), std::move(mults));
    }
    pair.twist = t;
    pair.points_on_P = 2 * n + 1;
    pair.points_on_F = 2 * n;
    if (restriction_degree(pair, Side::P) != restriction_degree(pair, Side::F))
        throw std::logic_error("limit_pair_m2: restriction degrees disagree");
    return pair;
}

LimitPair limit_pair_induction(i64 d, i64 m, i64 k) {
    if (m < 3) throw std::domain_error("limit_pair_induction: m must be >= 3");
    if (m > d - 2) throw std::domain_error("limit_pair_induction: m must be <= d-2");
    if (k < 1) throw std::domain_error("limit_pair_induction: k must be >= 1");
    LimitPair pair;
    pair.L_P = xi_class({d - 2, m - 2, k});
    pair.L_F = xi_class({d, 2, k});
    pair.twist = 0;
    i64 on_P = checked_mul(m - 2, 2 * d - m - 2);
    i64 on_F = 4 * d - 4;
    pair.points_on_P = on_P + 1;
    pair.points_on_F = on_F;
    if (checked_add(on_P, on_F) != checked_mul(m, 2 * d - m))
        throw std::logic_error("limit_pair_induction: point-count identity failed");
    if (restriction_degree(pair, Side::P) != restriction_degree(pair, Side::F))
        throw std::logic_error("limit_pair_induction: restriction degrees disagree");
    return pair;
}

i64 restriction_degree(const LimitPair& pair, Side side) {
    if (side == Side::P) return pair.L_P.degree;
    if (pair.L_F.points() == 0) throw std::domain_error("restriction_degree: F class has no vertex");
    return pair.L_F.mults[0];
}

DivisorClass kernel_system(const LimitPair& pair, Side side) {
    if (side == Side::P) {
        DivisorClass r = pair.L_P;
        r.degree = checked_sub(r.degree, 1);
        return r;
    }
    DivisorClass r = pair.L_F;
    if (r.points() == 0) throw std::domain_error("kernel_system: F class has no vertex");
    r.mults[0] = checked_add(r.mults[0], 1);
    return r;
}

RuledClass ruled_B(i64 index) { return RuledClass{index, 1, 0}; }
RuledClass ruled_f(i64 index) { return RuledClass{index, 0, 1}; }
RuledClass ruled_S(i64 index) { return RuledClass{index, 1, index}; }

namespace {
void require_same_surface(const RuledClass& x, const RuledClass& y) {
    if (x.index != y.index)
        throw std::invalid_argument("ruled classes live on different surfaces F_" +
                                    std::to_string(x.index) + " vs F_" + std::to_string(y.index));
}
}  // namespace

RuledClass ruled_add(const RuledClass& x, const RuledClass& y) {
    require_same_surface(x, y);
    return RuledClass{x.index, checked_add(x.b, y.b), checked_add(x.f, y.f)};
}

RuledClass ruled_sub(const RuledClass& x, const RuledClass& y) {
    require_same_surface(x, y);
    return RuledClass{x.index, checked_sub(x.b, y.b), checked_sub(x.f, y.f)};
}

RuledClass ruled_scale(i64 c, const RuledClass& x) {
    return RuledClass{x.index, checked_mul(c, x.b), checked_mul(c, x.f)};
}

i64 ruled_pair(const RuledClass& x, const RuledClass& y) {
    require_same_surface(x, y);
    // (aB + bf).(cB + df) = -i*ac + ad + bc
    i64 acc = checked_mul(-x.index, checked_mul(x.b, y.b));
    acc = checked_add(acc, checked_mul(x.b, y.f));
    return checked_add(acc, checked_mul(x.f, y.b));
}

std::vector<QStackEntry> q_stack(i64 m) {
    if (m < 2) throw std::domain_error("q_stack: m must be >= 2");
    std::vector<QStackEntry> out;
    for (i64 i = 0; i < m; ++i) {
        RuledClass normal;
        if (i == 0)
            normal = RuledClass{0, -1, -1};
        else if (i == m - 1)
            normal = RuledClass{i, -2, -m};
        else
            normal = RuledClass{i, -2, -(i + 1)};
        out.push_back(QStackEntry{normal, m - i});
    }
    return out;
}

RuledClass twisted_restriction(i64 m, i64 h, i64 i) {
    if (m < 2) throw std::domain_error("twisted_restriction: m must be >= 2");
    if (h < 1) throw std::domain_error("twisted_restriction: h must be >= 1");
    if (i < 0 || i >= m) throw std::domain_error("twisted_restriction: need 0 <= i <= m-1");
    i64 s = checked_mul(h, m);
    auto stack = q_stack(m);
    // the untwisted pullback restricts to -s*f on every level
    RuledClass acc = ruled_scale(-s, ruled_f(i));
    if (i == 0) {
        // neighbours: Q_0 itself (normal bundle) and Q_1 cutting S_0
        acc = ruled_sub(acc, ruled_scale(checked_mul(h, m), stack[0].normal));
        acc = ruled_sub(acc, ruled_scale(checked_mul(h, m - 1), ruled_S(0)));
        return acc;
    }
    if (i == m - 1) {
        // neighbours: Q_{m-2} cutting B_{m-1}, and Q_{m-1} itself
        acc = ruled_sub(acc, ruled_scale(checked_mul(h, 2), ruled_B(i)));
        acc = ruled_sub(acc, ruled_scale(h, stack[i].normal));
        return acc;
    }
    // interior level: Q_{i-1} cuts B_i, Q_{i+1} cuts S_i
    acc = ruled_sub(acc, ruled_scale(checked_mul(h, m - i + 1), ruled_B(i)));
    acc = ruled_sub(acc, ruled_scale(checked_mul(h, m - i), stack[i].normal));
    acc = ruled_sub(acc, ruled_scale(checked_mul(h, m - i - 1), ruled_S(i)));
    return acc;
}

MatchingSpec refined_matching(i64 s, i64 m) {
    if (s <= 0) throw std::domain_error("refined_matching: s must be > 0");
    if (m < 1) throw std::domain_error("refined_matching: m must be >= 1");
    if (s % m != 0) throw NotDivisibleError(s, m);
    MatchingSpec spec;
    spec.h = s / m;
    spec.m = m;
    spec.correspondence_conditions = checked_mul(spec.h, m - 1);
    return spec;
}

}  // namespace nonef
