#include "nonef/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace nonef {

using namespace fp;

bool UPoly::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](u64 v) { return v == 0; });
}

int UPoly::degree() const {
    for (std::size_t i = c.size(); i > 0; --i)
        if (c[i - 1] != 0) return static_cast<int>(i - 1);
    return -1;
}

void UPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

UPoly up_add(const UPoly& a, const UPoly& b, u64 p) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        u64 x = i < a.c.size() ? a.c[i] : 0;
        u64 y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = add_mod(x, y, p);
    }
    r.trim();
    return r;
}

UPoly up_sub(const UPoly& a, const UPoly& b, u64 p) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        u64 x = i < a.c.size() ? a.c[i] : 0;
        u64 y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = sub_mod(x, y, p);
    }
    r.trim();
    return r;
}

UPoly up_mul(const UPoly& a, const UPoly& b, u64 p) {
    if (a.is_zero() || b.is_zero()) return {};
    UPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = add_mod(r.c[i + j], mul_mod(a.c[i], b.c[j], p), p);
    }
    r.trim();
    return r;
}

UPoly up_scale(const UPoly& a, u64 s, u64 p) {
    UPoly r = a;
    for (auto& v : r.c) v = mul_mod(v, s, p);
    r.trim();
    return r;
}

u64 up_eval(const UPoly& a, u64 t, u64 p) {
    u64 acc = 0;
    for (std::size_t i = a.c.size(); i > 0; --i) acc = add_mod(mul_mod(acc, t, p), a.c[i - 1], p);
    return acc;
}

UPoly up_derivative(const UPoly& a, u64 p) {
    UPoly r;
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = mul_mod(a.c[i], i % p, p);
    r.trim();
    return r;
}

void up_divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r, u64 p) {
    int db = b.degree();
    if (db < 0) throw std::domain_error("up_divmod: division by zero polynomial");
    r = a;
    r.trim();
    q = UPoly{};
    int da = r.degree();
    if (da < db) return;
    q.c.assign(da - db + 1, 0);
    u64 lead_inv = inv_mod(b.c[db], p);
    for (int d = da; d >= db; --d) {
        if (static_cast<std::size_t>(d) >= r.c.size() || r.c[d] == 0) continue;
        u64 f = mul_mod(r.c[d], lead_inv, p);
        q.c[d - db] = f;
        for (int i = 0; i <= db; ++i)
            r.c[d - db + i] = sub_mod(r.c[d - db + i], mul_mod(f, b.c[i], p), p);
    }
    q.trim();
    r.trim();
}

UPoly up_divexact(const UPoly& a, const UPoly& b, u64 p) {
    UPoly q, r;
    up_divmod(a, b, q, r, p);
    if (!r.is_zero()) throw std::domain_error("up_divexact: non-exact division");
    return q;
}

UPoly up_gcd(UPoly a, UPoly b, u64 p) {
    a.trim();
    b.trim();
    while (!b.is_zero()) {
        UPoly q, r;
        up_divmod(a, b, q, r, p);
        a = std::move(b);
        b = std::move(r);
    }
    int d = a.degree();
    if (d >= 0) a = up_scale(a, inv_mod(a.c[d], p), p);
    return a;
}

UPoly up_shift(const UPoly& a, u64 t0, u64 p) {
    // Synthetic Horner rebase, O(n^2).
    UPoly r = a;
    r.c.resize(std::max<std::size_t>(a.c.size(), 1), 0);
    std::size_t n = r.c.size();
    for (std::size_t pass = 0; pass + 1 < n; ++pass)
        for (std::size_t i = n - 1; i > pass; --i)
            r.c[i - 1] = add_mod(r.c[i - 1], mul_mod(r.c[i], t0, p), p);
    r.trim();
    return r;
}

UPoly up_series_inv(const UPoly& a, std::size_t n, u64 p) {
    if (a.c.empty() || a.c[0] == 0) throw std::domain_error("up_series_inv: constant term is zero");
    UPoly g;
    g.c.assign(n, 0);
    u64 c0 = inv_mod(a.c[0], p);
    g.c[0] = c0;
    for (std::size_t k = 1; k < n; ++k) {
        u64 acc = 0;
        std::size_t jmax = std::min(k, a.c.size() - 1);
        for (std::size_t j = 1; j <= jmax; ++j)
            acc = add_mod(acc, mul_mod(a.c[j], g.c[k - j], p), p);
        g.c[k] = mul_mod(neg_mod(acc, p), c0, p);
    }
    return g;
}

UPoly up_mul_trunc(const UPoly& a, const UPoly& b, std::size_t n, u64 p) {
    UPoly r;
    r.c.assign(n, 0);
    for (std::size_t i = 0; i < a.c.size() && i < n; ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size() && i + j < n; ++j)
            r.c[i + j] = add_mod(r.c[i + j], mul_mod(a.c[i], b.c[j], p), p);
    }
    r.trim();
    return r;
}

namespace {

// x^e mod f, by repeated squaring in F_p[x]/(f).
UPoly up_powmod_x(u64 p, u64 e, const UPoly& f) {
    UPoly base;
    base.c = {0, 1};
    UPoly q, r;
    up_divmod(base, f, q, r, p);
    base = r;
    UPoly acc;
    acc.c = {1};
    while (e) {
        if (e & 1) {
            acc = up_mul(acc, base, p);
            up_divmod(acc, f, q, acc, p);
        }
        base = up_mul(base, base, p);
        up_divmod(base, f, q, base, p);
        e >>= 1;
    }
    return acc;
}

// (x + a)^((p-1)/2) mod f.
UPoly up_powmod_shifted(u64 p, const UPoly& f, u64 a) {
    UPoly base;
    base.c = {a, 1};
    UPoly q, r;
    up_divmod(base, f, q, r, p);
    base = r;
    UPoly acc;
    acc.c = {1};
    u64 e = (p - 1) / 2;
    while (e) {
        if (e & 1) {
            acc = up_mul(acc, base, p);
            up_divmod(acc, f, q, acc, p);
        }
        base = up_mul(base, base, p);
        up_divmod(base, f, q, base, p);
        e >>= 1;
    }
    return acc;
}

void split_linear(const UPoly& f, u64 p, fp::Rng& rng, std::vector<u64>& out) {
    int d = f.degree();
    if (d <= 0) return;
    if (d == 1) {
        // monicize: root = -c0 / c1
        out.push_back(mul_mod(neg_mod(f.c[0], p), inv_mod(f.c[1], p), p));
        return;
    }
    // Cantor-Zassenhaus equal-degree splitting for a product of distinct
    // linear factors.
    for (int attempt = 0; attempt < 64; ++attempt) {
        u64 a = rng.below(p);
        UPoly h = up_powmod_shifted(p, f, a);
        h = up_sub(h, UPoly({1}), p);
        UPoly g = up_gcd(h, f, p);
        int dg = g.degree();
        if (dg > 0 && dg < d) {
            split_linear(g, p, rng, out);
            split_linear(up_divexact(f, g, p), p, rng, out);
            return;
        }
    }
    throw std::runtime_error("up_roots: splitting failed to converge");
}

}  // namespace

std::vector<u64> up_roots(const UPoly& a, u64 p, fp::Rng& rng) {
    UPoly f = a;
    f.trim();
    if (f.is_zero()) throw std::domain_error("up_roots: zero polynomial");
    std::vector<u64> roots;
    if (f.degree() == 0) return roots;
    // gcd(f, x^p - x) = product of (x - r) over distinct roots r.
    UPoly xp = up_powmod_x(p, p, f);
    UPoly lin = up_sub(xp, UPoly({0, 1}), p);
    UPoly g = up_gcd(lin, f, p);
    if (g.degree() <= 0) return roots;
    split_linear(g, p, rng, roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

BiSeries bi_mul(const BiSeries& x, const BiSeries& y, u64 p) {
    BiSeries r(x.trunc);
    for (int s1 = 0; s1 <= x.trunc; ++s1)
        for (int b1 = 0; b1 <= s1; ++b1) {
            u64 v1 = x.c[BiSeries::index(s1, b1)];
            if (v1 == 0) continue;
            int smax = x.trunc - s1;
            for (int s2 = 0; s2 <= smax && s2 <= y.trunc; ++s2)
                for (int b2 = 0; b2 <= s2; ++b2) {
                    u64 v2 = y.c[BiSeries::index(s2, b2)];
                    if (v2 == 0) continue;
                    std::size_t idx = BiSeries::index(s1 + s2, b1 + b2);
                    r.c[idx] = add_mod(r.c[idx], mul_mod(v1, v2, p), p);
                }
        }
    return r;
}

BiSeries bi_from_u_series(const UPoly& f, u64 lin_w, int trunc, u64 p) {
    BiSeries r(trunc);
    for (std::size_t i = 0; i < f.c.size() && static_cast<int>(i) <= trunc; ++i)
        r.set(static_cast<int>(i), 0, f.c[i] % p);
    r.set(0, 1, add_mod(r.get(0, 1), lin_w % p, p));
    return r;
}

BiSeries bi_one(int trunc) {
    BiSeries r(trunc);
    r.c[0] = 1;
    return r;
}

}  // namespace nonef
