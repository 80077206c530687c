#include "nonef/modelcurve.hpp"

#include <algorithm>
#include <stdexcept>

#include "nonef/matrix.hpp"
#include "nonef/monomials.hpp"

namespace nonef {

using namespace fp;

bool proj_equal(const ProjPoint& a, const ProjPoint& b, u64 p) {
    // cross product zero
    return mul_mod(a.x, b.y, p) == mul_mod(a.y, b.x, p) &&
           mul_mod(a.x, b.z, p) == mul_mod(a.z, b.x, p) &&
           mul_mod(a.y, b.z, p) == mul_mod(a.z, b.y, p);
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, u64 p) {
    Mat3 m;
    m.m = {{{a.x, b.x, c.x}, {a.y, b.y, c.y}, {a.z, b.z, c.z}}};
    return mat3_det(m, p) == 0;
}

ProjPoint Mat3::apply(const ProjPoint& v, u64 p) const {
    auto dot = [&](int r) {
        u64 acc = mul_mod(m[r][0], v.x, p);
        acc = add_mod(acc, mul_mod(m[r][1], v.y, p), p);
        return add_mod(acc, mul_mod(m[r][2], v.z, p), p);
    };
    return ProjPoint{dot(0), dot(1), dot(2)};
}

u64 mat3_det(const Mat3& a, u64 p) {
    const auto& m = a.m;
    u64 t0 = mul_mod(m[0][0], sub_mod(mul_mod(m[1][1], m[2][2], p), mul_mod(m[1][2], m[2][1], p), p), p);
    u64 t1 = mul_mod(m[0][1], sub_mod(mul_mod(m[1][0], m[2][2], p), mul_mod(m[1][2], m[2][0], p), p), p);
    u64 t2 = mul_mod(m[0][2], sub_mod(mul_mod(m[1][0], m[2][1], p), mul_mod(m[1][1], m[2][0], p), p), p);
    return add_mod(sub_mod(t0, t1, p), t2, p);
}

Mat3 mat3_inverse(const Mat3& a, u64 p) {
    u64 det = mat3_det(a, p);
    if (det == 0) throw std::domain_error("mat3_inverse: singular matrix");
    u64 dinv = inv_mod(det, p);
    const auto& m = a.m;
    auto cof = [&](int r0, int c0, int r1, int c1) {
        return sub_mod(mul_mod(m[r0][c0], m[r1][c1], p), mul_mod(m[r0][c1], m[r1][c0], p), p);
    };
    Mat3 inv;
    inv.m[0][0] = mul_mod(cof(1, 1, 2, 2), dinv, p);
    inv.m[0][1] = mul_mod(neg_mod(cof(0, 1, 2, 2), p), dinv, p);
    inv.m[0][2] = mul_mod(cof(0, 1, 1, 2), dinv, p);
    inv.m[1][0] = mul_mod(neg_mod(cof(1, 0, 2, 2), p), dinv, p);
    inv.m[1][1] = mul_mod(cof(0, 0, 2, 2), dinv, p);
    inv.m[1][2] = mul_mod(neg_mod(cof(0, 0, 1, 2), p), dinv, p);
    inv.m[2][0] = mul_mod(cof(1, 0, 2, 1), dinv, p);
    inv.m[2][1] = mul_mod(neg_mod(cof(0, 0, 2, 1), p), dinv, p);
    inv.m[2][2] = mul_mod(cof(0, 0, 1, 1), dinv, p);
    return inv;
}

PlaneQuadMap PlaneQuadMap::based_at(const ProjPoint& q0, const ProjPoint& q1, const ProjPoint& q2,
                                    u64 p) {
    PlaneQuadMap s;
    s.M.m = {{{q0.x, q1.x, q2.x}, {q0.y, q1.y, q2.y}, {q0.z, q1.z, q2.z}}};
    s.Minv = mat3_inverse(s.M, p);
    return s;
}

ProjPoint PlaneQuadMap::apply(const ProjPoint& v, u64 p) const {
    ProjPoint h = Minv.apply(v, p);
    ProjPoint std_img{mul_mod(h.y, h.z, p), mul_mod(h.x, h.z, p), mul_mod(h.x, h.y, p)};
    return M.apply(std_img, p);
}

void PlaneQuadMap::apply_param(UPoly& X, UPoly& Y, UPoly& Z, u64 p) const {
    auto lin = [&](int r) {
        UPoly acc = up_scale(X, Minv.m[r][0], p);
        acc = up_add(acc, up_scale(Y, Minv.m[r][1], p), p);
        return up_add(acc, up_scale(Z, Minv.m[r][2], p), p);
    };
    UPoly hx = lin(0), hy = lin(1), hz = lin(2);
    UPoly sx = up_mul(hy, hz, p), sy = up_mul(hx, hz, p), sz = up_mul(hx, hy, p);
    auto out = [&](int r) {
        UPoly acc = up_scale(sx, M.m[r][0], p);
        acc = up_add(acc, up_scale(sy, M.m[r][1], p), p);
        return up_add(acc, up_scale(sz, M.m[r][2], p), p);
    };
    UPoly nx = out(0), ny = out(1), nz = out(2);
    UPoly g = up_gcd(up_gcd(nx, ny, p), nz, p);
    if (g.degree() > 0) {
        nx = up_divexact(nx, g, p);
        ny = up_divexact(ny, g, p);
        nz = up_divexact(nz, g, p);
    }
    X = std::move(nx);
    Y = std::move(ny);
    Z = std::move(nz);
}

u64 ModelCurve::eval_implicit(u64 x, u64 y, u64 z) const {
    auto pairs = monomial_pairs(static_cast<int>(degree));
    u64 acc = 0;
    for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
        if (implicit_hom[idx] == 0) continue;
        auto [i, j] = pairs[idx];
        int kz = static_cast<int>(degree) - i - j;
        u64 term = mul_mod(pow_mod(x, i, p), pow_mod(y, j, p), p);
        term = mul_mod(term, pow_mod(z, kz, p), p);
        acc = add_mod(acc, mul_mod(implicit_hom[idx], term, p), p);
    }
    return acc;
}

std::array<u64, 2> ModelCurve::affine_gradient(u64 x, u64 y) const {
    auto pairs = monomial_pairs(static_cast<int>(degree));
    u64 gx = 0, gy = 0;
    for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
        u64 c = implicit_hom[idx];
        if (c == 0) continue;
        auto [i, j] = pairs[idx];
        if (i > 0) {
            u64 t = mul_mod(c, i % p, p);
            t = mul_mod(t, pow_mod(x, i - 1, p), p);
            t = mul_mod(t, pow_mod(y, j, p), p);
            gx = add_mod(gx, t, p);
        }
        if (j > 0) {
            u64 t = mul_mod(c, j % p, p);
            t = mul_mod(t, pow_mod(x, i, p), p);
            t = mul_mod(t, pow_mod(y, j - 1, p), p);
            gy = add_mod(gy, t, p);
        }
    }
    return {gx, gy};
}

std::vector<u64> ModelCurve::affine_coeffs() const {
    return implicit_hom;  // z = 1: same coefficients, same order
}

CurvePoint ModelCurve::sample_smooth(fp::Rng& rng, const std::vector<u64>& used) const {
    for (int attempt = 0; attempt < 32; ++attempt) {
        if (has_param) {
            u64 t = rng.below(p);
            if (std::find(used.begin(), used.end(), t) != used.end()) continue;
            u64 zt = up_eval(pz, t, p);
            if (zt == 0) continue;
            u64 zi = inv_mod(zt, p);
            u64 x = mul_mod(up_eval(px, t, p), zi, p);
            u64 y = mul_mod(up_eval(py, t, p), zi, p);
            auto g = affine_gradient(x, y);
            if (g[0] == 0 && g[1] == 0) continue;
            // reject non-immersive parameters: branch tangent must be nonzero
            auto branch = branch_series(CurvePoint{t, x, y}, 2);
            u64 dx = branch.first.c.size() > 1 ? branch.first.c[1] : 0;
            u64 dy = branch.second.c.size() > 1 ? branch.second.c[1] : 0;
            if (dx == 0 && dy == 0) continue;
            return CurvePoint{t, x, y};
        }
        // implicit-only: random vertical fiber, smallest smooth root
        u64 x0 = rng.below(p);
        if (std::find(used.begin(), used.end(), x0) != used.end()) continue;
        auto pairs = monomial_pairs(static_cast<int>(degree));
        UPoly fy;
        fy.c.assign(static_cast<std::size_t>(degree) + 1, 0);
        for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
            if (implicit_hom[idx] == 0) continue;
            auto [i, j] = pairs[idx];
            u64 t = mul_mod(implicit_hom[idx], pow_mod(x0, i, p), p);
            fy.c[j] = add_mod(fy.c[j], t, p);
        }
        fy.trim();
        if (fy.is_zero()) continue;
        auto roots = up_roots(fy, p, rng);
        for (u64 y0 : roots) {
            auto g = affine_gradient(x0, y0);
            if (g[0] == 0 && g[1] == 0) continue;
            return CurvePoint{x0, x0, y0};
        }
    }
    throw std::runtime_error("ModelCurve::sample_smooth: resampling budget exhausted");
}

std::pair<UPoly, UPoly> ModelCurve::branch_series(const CurvePoint& at, std::size_t prec) const {
    if (!has_param)
        throw std::domain_error("ModelCurve::branch_series: curve has no parametrization");
    UPoly xs = up_shift(px, at.param, p);
    UPoly ys = up_shift(py, at.param, p);
    UPoly zs = up_shift(pz, at.param, p);
    if (zs.c.empty() || zs.c[0] == 0)
        throw std::domain_error("ModelCurve::branch_series: point at infinity");
    UPoly zi = up_series_inv(zs, prec, p);
    return {up_mul_trunc(xs, zi, prec, p), up_mul_trunc(ys, zi, prec, p)};
}

namespace {

// Kernel of the evaluation matrix of degree-`degree` curves at the given
// projective points; must be one-dimensional.
std::vector<u64> implicitize(i64 degree, const std::vector<ProjPoint>& pts, u64 p) {
    auto pairs = monomial_pairs(static_cast<int>(degree));
    Matrix m(pts.size(), pairs.size());
    for (std::size_t r = 0; r < pts.size(); ++r) {
        for (std::size_t cidx = 0; cidx < pairs.size(); ++cidx) {
            auto [i, j] = pairs[cidx];
            int kz = static_cast<int>(degree) - i - j;
            u64 v = mul_mod(pow_mod(pts[r].x, i, p), pow_mod(pts[r].y, j, p), p);
            m.at(r, cidx) = mul_mod(v, pow_mod(pts[r].z, kz, p), p);
        }
    }
    auto basis = nullspace(std::move(m), p);
    if (basis.size() != 1)
        throw std::runtime_error("implicitize: kernel dimension " + std::to_string(basis.size()) +
                                 ", expected 1");
    auto v = basis[0];
    for (u64 c : v)
        if (c != 0) {
            u64 inv = inv_mod(c, p);
            for (auto& w : v) w = mul_mod(w, inv, p);
            break;
        }
    return v;
}

// Coefficients of f(x0+u, y0+v) of total order < upto, f given by affine
// coefficients in monomial_pairs(degree) order.
std::vector<std::vector<u64>> shifted_low_order(const std::vector<u64>& coeffs, i64 degree, u64 x0,
                                                u64 y0, int upto, u64 p) {
    auto pairs = monomial_pairs(static_cast<int>(degree));
    std::vector<std::vector<u64>> out(upto, std::vector<u64>());
    for (int s = 0; s < upto; ++s) out[s].assign(s + 1, 0);
    int d = static_cast<int>(degree);
    // binomials mod p (degree is tiny compared to p)
    std::vector<std::vector<u64>> binom(d + 1, std::vector<u64>(d + 1, 0));
    for (int i = 0; i <= d; ++i) {
        binom[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            binom[i][j] = add_mod(binom[i - 1][j - 1], j <= i - 1 ? binom[i - 1][j] : 0, p);
    }
    std::vector<u64> xpow(d + 1, 1), ypow(d + 1, 1);
    for (int e = 1; e <= d; ++e) {
        xpow[e] = mul_mod(xpow[e - 1], x0, p);
        ypow[e] = mul_mod(ypow[e - 1], y0, p);
    }
    for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
        u64 c = coeffs[idx];
        if (c == 0) continue;
        auto [i, j] = pairs[idx];
        for (int a = 0; a <= i; ++a)
            for (int b = 0; b <= j; ++b) {
                if (a + b >= upto) continue;
                u64 t = mul_mod(binom[i][a], binom[j][b], p);
                t = mul_mod(t, xpow[i - a], p);
                t = mul_mod(t, ypow[j - b], p);
                out[a + b][b] = add_mod(out[a + b][b], mul_mod(c, t, p), p);
            }
    }
    return out;
}

}  // namespace

ModelCurve implicit_curve_through(const std::string& name, i64 degree,
                                  const std::vector<std::pair<u64, u64>>& pts, u64 p) {
    std::vector<ProjPoint> proj;
    proj.reserve(pts.size());
    for (auto& [x, y] : pts) proj.push_back(ProjPoint{x, y, 1});
    ModelCurve c;
    c.name = name;
    c.p = p;
    c.degree = degree;
    c.has_param = false;
    c.implicit_hom = implicitize(degree, proj, p);
    return c;
}

ModelCurveT build_model_curve_T(i64 n, u64 p, fp::Rng rng) {
    if (n < 2) throw std::domain_error("build_model_curve_T: n must be >= 2");
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<ProjPoint> pts;
        for (i64 i = 0; i < 2 * n + 1; ++i) pts.push_back(ProjPoint{rng.below(p), rng.below(p), 1});
        // the tracked line R
        UPoly X({rng.below(p), rng.below(p)});
        UPoly Y({rng.below(p), rng.below(p)});
        UPoly Z({1, 0});
        TransformLog chain;
        bool ok = true;
        for (i64 s = 1; s <= n && ok; ++s) {
            const ProjPoint &q1 = pts[2 * s - 1], &q2 = pts[2 * s];
            if (collinear(pts[0], q1, q2, p)) {
                ok = false;
                break;
            }
            auto sigma = PlaneQuadMap::based_at(pts[0], q1, q2, p);
            sigma.apply_param(X, Y, Z, p);
            // base points keep their positions; everything else moves
            for (i64 i = 2 * s + 1; i < 2 * n + 1; ++i) {
                pts[i] = sigma.apply(pts[i], p);
                if (pts[i].x == 0 && pts[i].y == 0 && pts[i].z == 0) {
                    ok = false;
                    break;
                }
            }
            chain.steps.push_back(QuadTransform{0, static_cast<std::size_t>(2 * s - 1),
                                                static_cast<std::size_t>(2 * s)});
        }
        if (!ok) continue;
        i64 deg = std::max({X.degree(), Y.degree(), Z.degree()});
        if (deg != n + 1) continue;

        // implicitize from parameter samples
        std::vector<ProjPoint> samples;
        u64 t = 1;
        while (samples.size() < static_cast<std::size_t>(monomial_count(n + 1)) + 8) {
            samples.push_back(ProjPoint{up_eval(X, t, p), up_eval(Y, t, p), up_eval(Z, t, p)});
            ++t;
        }
        std::vector<u64> implicit;
        try {
            implicit = implicitize(n + 1, samples, p);
        } catch (const std::runtime_error&) {
            continue;
        }

        ModelCurveT result;
        result.curve.name = "T";
        result.curve.p = p;
        result.curve.degree = n + 1;
        result.curve.has_param = true;
        result.curve.px = X;
        result.curve.py = Y;
        result.curve.pz = Z;
        result.curve.implicit_hom = std::move(implicit);
        result.curve.singular = pts[0];
        result.curve.singular_mult = n;
        result.chain = chain;
        {
            DivisorClass line(1, std::vector<i64>(2 * n + 1, 0));
            result.line_image = image_under_log(line, chain);
        }

        // exact check: the parametrization satisfies the implicit equation
        {
            auto prs = monomial_pairs(static_cast<int>(n + 1));
            std::vector<UPoly> xp(n + 2), yp(n + 2), zp(n + 2);
            xp[0] = yp[0] = zp[0] = UPoly({1});
            for (i64 e = 1; e <= n + 1; ++e) {
                xp[e] = up_mul(xp[e - 1], X, p);
                yp[e] = up_mul(yp[e - 1], Y, p);
                zp[e] = up_mul(zp[e - 1], Z, p);
            }
            UPoly total;
            for (std::size_t idx = 0; idx < prs.size(); ++idx) {
                u64 c = result.curve.implicit_hom[idx];
                if (c == 0) continue;
                auto [i, j] = prs[idx];
                UPoly term = up_mul(up_mul(xp[i], yp[j], p), zp[n + 1 - i - j], p);
                total = up_add(total, up_scale(term, c, p), p);
            }
            if (!total.is_zero()) continue;
        }

        // the distinguished point has multiplicity exactly n
        {
            u64 x0 = mul_mod(pts[0].x, inv_mod(pts[0].z, p), p);
            u64 y0 = mul_mod(pts[0].y, inv_mod(pts[0].z, p), p);
            auto low = shifted_low_order(result.curve.affine_coeffs(), n + 1, x0, y0,
                                         static_cast<int>(n) + 1, p);
            bool below_vanish = true;
            for (int s = 0; s < static_cast<int>(n) && below_vanish; ++s)
                for (u64 v : low[s])
                    if (v != 0) {
                        below_vanish = false;
                        break;
                    }
            bool order_n_nonzero = false;
            for (u64 v : low[static_cast<std::size_t>(n)])
                if (v != 0) {
                    order_n_nonzero = true;
                    break;
                }
            if (!below_vanish || !order_n_nonzero) continue;
        }
        return result;
    }
    throw std::runtime_error("build_model_curve_T: resampling budget exhausted");
}

}  // namespace nonef
