#pragma once

// Bookkeeping for the two-component degeneration of the plane (P and an
// F_1 glued along a double curve R) and for the ruled-surface stack created
// by repeatedly blowing up a (-1)-curve through m points of R: limit pairs
// under twisting, kernel systems, normal bundles, twisted restrictions, and
// the refined matching data of a throw.
//
// Systems on F are represented as plane systems with the multiplicity at
// the blown-up vertex in slot 0, so every class stays consumable by the
// lattice and Cremona modules.

#include <vector>

#include "nonef/lattice.hpp"

namespace nonef {

struct LimitPair {
    DivisorClass L_P;
    DivisorClass L_F;
    i64 twist = 0;
    i64 points_on_P = 0;  // marked points on P, including the big one
    i64 points_on_F = 0;
};

enum class Side { P, F };

// L_P = (kn+t; k(n-1), k^(2n)),  L_F = (k(n+1); kn+t, k^(2n)),  n = d-1.
// Throws std::domain_error unless d >= 4, k >= 1, t >= 0.
LimitPair limit_pair_m2(i64 d, i64 k, i64 t);

// L_P = k*xi_{d-2,m-2},  L_F = k*xi_{d,2}; checks the point-count identity
// (m-2)(2d-m-2) + 4d-4 = m(2d-m).  Requires 3 <= m <= d-2, k >= 1.
LimitPair limit_pair_induction(i64 d, i64 m, i64 k);

// Degree of the restriction to the double curve R: the degree of L_P on
// the P side (R is a general line there), the vertex multiplicity on the F
// side (R is the (-1)-section).  Equal on both sides of any valid pair.
i64 restriction_degree(const LimitPair& pair, Side side);

// Members vanishing on R: subtract a line on P, subtract the (-1)-section
// on F (vertex multiplicity goes up by one).
DivisorClass kernel_system(const LimitPair& pair, Side side);

// a*B_i + b*f on the Hirzebruch surface F_i.  Pairing: B^2 = -i, B.f = 1,
// f^2 = 0; the disjoint positive section is S_i = B_i + i*f.
struct RuledClass {
    i64 index = 0;
    i64 b = 0;  // coefficient of B_i
    i64 f = 0;  // coefficient of f

    bool is_zero() const { return b == 0 && f == 0; }
    bool operator==(const RuledClass&) const = default;
};

RuledClass ruled_B(i64 index);
RuledClass ruled_f(i64 index);
RuledClass ruled_S(i64 index);  // B_i + i*f
RuledClass ruled_add(const RuledClass& x, const RuledClass& y);
RuledClass ruled_sub(const RuledClass& x, const RuledClass& y);
RuledClass ruled_scale(i64 c, const RuledClass& x);
i64 ruled_pair(const RuledClass& x, const RuledClass& y);  // same index required

struct QStackEntry {
    RuledClass normal;  // normal bundle of Q_i in the blown-up threefold
    i64 multiplicity;   // multiplicity of Q_i in the central fibre: m - i
};

// The stack Q_0..Q_{m-1} of an m-fold throw: normal bundles
//   i = 0:       -B_0 - f
//   0 < i < m-1: -2B_i - (i+1) f
//   i = m-1:     -2B_{m-1} - m f
// (the middle formula is also applied at i = 1).  Requires m >= 2.
std::vector<QStackEntry> q_stack(i64 m);

// Restriction to Q_i of the pulled-back bundle after the trivializing
// twist, evaluated from the pairing rules: h*B_0 on Q_0, zero on every
// other level.  s = h*m throughout.
RuledClass twisted_restriction(i64 m, i64 h, i64 i);

// Refined matching data of a throw with C.L = -s at m marked points.
struct MatchingSpec {
    i64 h = 0;                          // s / m
    i64 m = 0;                          // marked points; chain type is [h^m]
    i64 correspondence_conditions = 0;  // h(m-1)
};

struct NotDivisibleError : std::domain_error {
    i64 s, m;
    NotDivisibleError(i64 s_, i64 m_)
        : std::domain_error("refined matching needs m | s; got s = " + std::to_string(s_) +
                            ", m = " + std::to_string(m_)),
          s(s_),
          m(m_) {}
};

// Throws NotDivisibleError when m does not divide s.
MatchingSpec refined_matching(i64 s, i64 m);

}  // namespace nonef
