#include <doctest.h>

#include "nonef/modarith.hpp"
#include "nonef/series.hpp"

using namespace nonef;
using namespace nonef::fp;

TEST_CASE("univariate basics") {
    Rng rng(31);
    u64 p = random_prime_62(rng);
    UPoly a({1, 2, 3});  // 1 + 2t + 3t^2
    UPoly b({p - 1, 1});  // t - 1
    CHECK(up_eval(a, 2, p) == 17);
    CHECK(up_mul(a, b, p).degree() == 3);
    CHECK(up_eval(up_mul(a, b, p), 5, p) == mul_mod(up_eval(a, 5, p), up_eval(b, 5, p), p));
    CHECK(up_derivative(a, p).c == std::vector<u64>({2, 6}));
    auto sum = up_add(a, b, p);
    CHECK(up_sub(sum, b, p).c == a.c);
}

TEST_CASE("divmod, gcd, exact division") {
    Rng rng(32);
    u64 p = random_prime_62(rng);
    for (int trial = 0; trial < 100; ++trial) {
        auto rand_poly = [&](std::size_t deg) {
            UPoly f;
            f.c.resize(deg + 1);
            for (auto& c : f.c) c = rng.below(p);
            f.c[deg] = rng.field_elem_nonzero(p);
            return f;
        };
        UPoly a = rand_poly(1 + rng.below(8)), b = rand_poly(1 + rng.below(4)),
              g = rand_poly(rng.below(3));
        UPoly q, r;
        up_divmod(a, b, q, r, p);
        REQUIRE(up_add(up_mul(q, b, p), r, p).c == a.c);
        REQUIRE(r.degree() < b.degree());
        // gcd divides both products
        UPoly ag = up_mul(a, g, p), bg = up_mul(b, g, p);
        UPoly d = up_gcd(ag, bg, p);
        REQUIRE(d.degree() >= g.degree());
        CHECK_NOTHROW(up_divexact(ag, d, p));
        CHECK_NOTHROW(up_divexact(bg, d, p));
    }
}

TEST_CASE("taylor shift") {
    Rng rng(33);
    u64 p = random_prime_62(rng);
    UPoly f({3, 0, 1, 5});
    u64 t0 = rng.below(p);
    UPoly g = up_shift(f, t0, p);
    for (u64 u : {u64(0), u64(1), u64(17)})
        REQUIRE(up_eval(g, u, p) == up_eval(f, add_mod(t0, u, p), p));
}

TEST_CASE("series inverse") {
    Rng rng(34);
    u64 p = random_prime_62(rng);
    UPoly f({7, 3, 0, 2, 1});
    UPoly g = up_series_inv(f, 12, p);
    UPoly prod = up_mul_trunc(f, g, 12, p);
    REQUIRE(prod.c.size() >= 1);
    CHECK(prod.c[0] == 1);
    for (std::size_t i = 1; i < prod.c.size(); ++i) CHECK(prod.c[i] == 0);
    CHECK_THROWS_AS(up_series_inv(UPoly({0, 1}), 4, p), std::domain_error);
}

TEST_CASE("root finding") {
    Rng rng(35);
    u64 p = random_prime_62(rng);
    // (t - 5)(t - 9)(t - 5000)
    UPoly f({1});
    for (u64 r : {u64(5), u64(9), u64(5000)}) f = up_mul(f, UPoly({neg_mod(r, p), 1}), p);
    auto roots = up_roots(f, p, rng);
    CHECK(roots == std::vector<u64>({5, 9, 5000}));
    // irreducible-ish: a random quadratic with no roots about half the time;
    // just check consistency of reported roots
    for (int trial = 0; trial < 50; ++trial) {
        UPoly g({rng.below(p), rng.below(p), 1});
        for (u64 r : up_roots(g, p, rng)) REQUIRE(up_eval(g, r, p) == 0);
    }
}

TEST_CASE("bivariate truncated series") {
    Rng rng(36);
    u64 p = random_prime_62(rng);
    // (1 + u + w)^2 = 1 + 2u + 2w + u^2 + 2uw + w^2
    BiSeries s(4);
    s.set(0, 0, 1);
    s.set(1, 0, 1);
    s.set(0, 1, 1);
    BiSeries sq = bi_mul(s, s, p);
    CHECK(sq.get(0, 0) == 1);
    CHECK(sq.get(1, 0) == 2);
    CHECK(sq.get(0, 1) == 2);
    CHECK(sq.get(2, 0) == 1);
    CHECK(sq.get(1, 1) == 2);
    CHECK(sq.get(0, 2) == 1);
    CHECK(sq.get(3, 0) == 0);
    // truncation: products beyond total degree vanish
    BiSeries t(2);
    t.set(2, 0, 3);
    BiSeries tt = bi_mul(t, t, p);
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b) REQUIRE(tt.get(a, b) == 0);
}

TEST_CASE("bi_from_u_series embeds the branch") {
    u64 p = 1000003;  // small prime is fine here
    UPoly f({5, 7, 11});
    BiSeries s = bi_from_u_series(f, 13, 5, p);
    CHECK(s.get(0, 0) == 5);
    CHECK(s.get(1, 0) == 7);
    CHECK(s.get(2, 0) == 11);
    CHECK(s.get(0, 1) == 13);
    CHECK(s.get(1, 1) == 0);
}
