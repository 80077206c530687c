#pragma once

// Model curves over F_p used as carriers of point conditions: rational
// parametrization (when available), implicit equation witness, and local
// branch expansions at smooth points.
//
// The distinguished construction is the image of a general line under a
// chain of n plane quadratic maps, each based at a fixed first point and a
// fresh pair of points: a degree-(n+1) rational curve with one point of
// multiplicity n.  The maps are honest coordinate maps, conjugates of
// (x:y:z) -> (yz:xz:xy), so the parametrization and implicit equation are
// exact by construction.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nonef/lattice.hpp"
#include "nonef/cremona.hpp"
#include "nonef/modarith.hpp"
#include "nonef/series.hpp"

namespace nonef {

struct ProjPoint {
    u64 x = 0, y = 0, z = 0;
};

// Equality in P^2 (up to scale).
bool proj_equal(const ProjPoint& a, const ProjPoint& b, u64 p);
bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, u64 p);

struct Mat3 {
    std::array<std::array<u64, 3>, 3> m{};

    ProjPoint apply(const ProjPoint& v, u64 p) const;
};

u64 mat3_det(const Mat3& a, u64 p);
Mat3 mat3_inverse(const Mat3& a, u64 p);  // throws std::domain_error if singular

// The quadratic involution with base points q0, q1, q2:
// sigma = M o std o M^{-1}, std(x:y:z) = (yz:xz:xy), M = (q0 | q1 | q2).
// Contracts the line through q_j, q_k to q_i; fixes the base points as
// positions in the target plane.
struct PlaneQuadMap {
    Mat3 M, Minv;

    static PlaneQuadMap based_at(const ProjPoint& q0, const ProjPoint& q1, const ProjPoint& q2,
                                 u64 p);

    // Undefined at the base points; returns (0:0:0) there.
    ProjPoint apply(const ProjPoint& v, u64 p) const;

    // Push a parametrized curve through the map and strip the content gcd.
    void apply_param(UPoly& X, UPoly& Y, UPoly& Z, u64 p) const;
};

struct CurvePoint {
    u64 param = 0;  // parameter value (or the sampled x for implicit-only curves)
    u64 x = 0, y = 0;
};

struct ModelCurve {
    std::string name;
    u64 p = 0;
    i64 degree = 0;

    bool has_param = false;
    UPoly px, py, pz;  // homogeneous parametrization (X(t):Y(t):Z(t))

    // Homogeneous implicit equation, coefficients in monomial_pairs(degree)
    // order (x^i y^j z^(degree-i-j)); first nonzero coefficient normalized
    // to 1.
    std::vector<u64> implicit_hom;

    ProjPoint singular;  // distinguished singular point, if any
    i64 singular_mult = 0;

    u64 eval_implicit(u64 x, u64 y, u64 z) const;
    // (d/dx, d/dy) of the affine equation at (x, y).
    std::array<u64, 2> affine_gradient(u64 x, u64 y) const;

    // Affine coefficient vector of the implicit equation (z = 1), in
    // monomial_pairs(degree) order.
    std::vector<u64> affine_coeffs() const;

    // Sample a smooth point, avoiding the parameters/points in `used`
    // (compared by param).  Throws std::runtime_error after 32 resamples.
    CurvePoint sample_smooth(fp::Rng& rng, const std::vector<u64>& used) const;

    // Local branch through the point: (x(u), y(u)) truncated mod u^prec,
    // with (x(0), y(0)) the point itself.  Requires a parametrization.
    std::pair<UPoly, UPoly> branch_series(const CurvePoint& at, std::size_t prec) const;
};

// Implicit-only model curve of given degree through the given affine
// points (one extra condition short of determined is the caller's
// business); the kernel of the evaluation matrix must be 1-dimensional.
ModelCurve implicit_curve_through(const std::string& name, i64 degree,
                                  const std::vector<std::pair<u64, u64>>& pts, u64 p);

// The degree-(n+1) model curve with an n-fold point: image of a general
// line under n quadratic maps based at a common first point and fresh
// pairs.  Deterministic given (p, rng state).  Also returns the expected
// divisor class bookkeeping for cross-checks.
struct ModelCurveT {
    ModelCurve curve;
    TransformLog chain;          // the n lattice-level steps (0,1,2), (0,3,4), ...
    DivisorClass line_image;     // image_under_log of the line class
};

ModelCurveT build_model_curve_T(i64 n, u64 p, fp::Rng rng);

}  // namespace nonef
