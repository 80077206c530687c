#include <doctest.h>

#include "nonef/degeneration.hpp"
#include "nonef/notation.hpp"

using namespace nonef;

TEST_CASE("m=2 limit pairs") {
    {
        auto pair = limit_pair_m2(4, 4, 1);
        CHECK(pair.L_P == parse_class("13;8,4^6"));
        CHECK(pair.L_F == parse_class("16;13,4^6"));
        CHECK(pair.points_on_P == 7);
        CHECK(pair.points_on_F == 6);
    }
    {
        auto pair = limit_pair_m2(4, 3, 0);
        CHECK(pair.L_P == parse_class("9;6,3^6"));
        CHECK(pair.L_F == parse_class("12;9,3^6"));
    }
    {
        auto pair = limit_pair_m2(5, 4, 1);
        CHECK(pair.L_P == parse_class("17;12,4^8"));
        CHECK(pair.L_F == parse_class("20;17,4^8"));
    }
    CHECK_THROWS_AS(limit_pair_m2(3, 1, 0), std::domain_error);
    CHECK_THROWS_AS(limit_pair_m2(4, 1, -1), std::domain_error);
}

TEST_CASE("induction limit pairs") {
    {
        auto pair = limit_pair_induction(6, 4, 1);
        CHECK(pair.L_P == xi_class({4, 2, 1}));
        CHECK(pair.L_F == xi_class({6, 2, 1}));
        CHECK(pair.L_P == parse_class("4;2,1^12"));
        CHECK(pair.L_F == parse_class("6;4,1^20"));
    }
    {
        auto pair = limit_pair_induction(5, 3, 2);
        CHECK(pair.L_P == parse_class("6;4,2^5"));
        CHECK(pair.L_P == xi_class({3, 1, 2}));
        CHECK(pair.L_F == parse_class("10;6,2^16"));
    }
    for (i64 d = 5; d <= 22; ++d)
        for (i64 m = 3; m <= d - 2; ++m)
            REQUIRE((m - 2) * (2 * d - m - 2) + 4 * d - 4 == m * (2 * d - m));
    CHECK_THROWS_AS(limit_pair_induction(5, 2, 1), std::domain_error);
    CHECK_THROWS_AS(limit_pair_induction(5, 4, 1), std::domain_error);
}

TEST_CASE("restriction degrees and kernel systems") {
    auto pair = limit_pair_m2(4, 4, 1);
    CHECK(restriction_degree(pair, Side::P) == 13);
    CHECK(restriction_degree(pair, Side::F) == 13);
    CHECK(kernel_system(pair, Side::P) == parse_class("12;8,4^6"));
    CHECK(kernel_system(pair, Side::F) == parse_class("16;14,4^6"));
    {
        auto p0 = limit_pair_m2(4, 3, 0);
        CHECK(restriction_degree(p0, Side::P) == 9);
        CHECK(restriction_degree(p0, Side::F) == 9);
        // removing the double curve on P drops the degree by one
        CHECK(kernel_system(p0, Side::P).degree == p0.L_P.degree - 1);
    }
    // the whole replay grid has matching restriction degrees
    for (i64 d = 4; d <= 9; ++d)
        for (i64 k = 1; k <= 12; ++k)
            for (i64 t = 0; t <= k / (d - 1); ++t) {
                auto q = limit_pair_m2(d, k, t);
                REQUIRE(restriction_degree(q, Side::P) == restriction_degree(q, Side::F));
            }
    for (i64 d = 5; d <= 9; ++d)
        for (i64 m = 3; m <= d - 2; ++m)
            for (i64 k = 1; k <= 3; ++k) {
                auto q = limit_pair_induction(d, m, k);
                REQUIRE(restriction_degree(q, Side::P) == restriction_degree(q, Side::F));
            }
}

TEST_CASE("ruled surface pairing") {
    for (i64 i = 0; i <= 12; ++i) {
        CHECK(ruled_pair(ruled_B(i), ruled_B(i)) == -i);
        CHECK(ruled_pair(ruled_B(i), ruled_f(i)) == 1);
        CHECK(ruled_pair(ruled_f(i), ruled_f(i)) == 0);
        CHECK(ruled_pair(ruled_S(i), ruled_S(i)) == i);
        CHECK(ruled_pair(ruled_S(i), ruled_B(i)) == 0);
    }
    CHECK_THROWS_AS(ruled_pair(ruled_B(1), ruled_B(2)), std::invalid_argument);
}

TEST_CASE("the exceptional stack") {
    {
        auto stack = q_stack(2);
        REQUIRE(stack.size() == 2);
        CHECK(stack[0].normal == RuledClass{0, -1, -1});
        CHECK(stack[0].multiplicity == 2);
        CHECK(stack[1].normal == RuledClass{1, -2, -2});
        CHECK(stack[1].multiplicity == 1);
    }
    CHECK(q_stack(4)[2].normal == RuledClass{2, -2, -3});
    CHECK(q_stack(4)[2].multiplicity == 2);
    CHECK(q_stack(3)[2].normal == RuledClass{2, -2, -3});
    CHECK(q_stack(3)[2].multiplicity == 1);
    // the i = 1 middle level for m >= 3 follows the interior pattern
    CHECK(q_stack(3)[1].normal == RuledClass{1, -2, -2});
    CHECK_THROWS_AS(q_stack(1), std::domain_error);
}

TEST_CASE("twisted restrictions trivialize the stack") {
    CHECK(twisted_restriction(3, 2, 0) == ruled_scale(2, ruled_B(0)));
    CHECK(twisted_restriction(4, 1, 2).is_zero());
    CHECK(twisted_restriction(5, 3, 4).is_zero());
    for (i64 m = 2; m <= 12; ++m)
        for (i64 h = 1; h <= 6; ++h) {
            REQUIRE(twisted_restriction(m, h, 0) == ruled_scale(h, ruled_B(0)));
            for (i64 i = 1; i <= m - 1; ++i) REQUIRE(twisted_restriction(m, h, i).is_zero());
        }
}

TEST_CASE("refined matching") {
    {
        // the multiply-split (-1)-curve: s = t(n-1) at m = n-1 points
        i64 n = 5, t = 3;
        auto spec = refined_matching(t * (n - 1), n - 1);
        CHECK(spec.h == t);
        CHECK(spec.m == n - 1);
        CHECK(spec.correspondence_conditions == t * (n - 2));
    }
    {
        // t = 0 case: s = k = h*n at m = n points
        auto spec = refined_matching(8, 4);
        CHECK(spec.h == 2);
        CHECK(spec.correspondence_conditions == 2 * 3);
    }
    CHECK_THROWS_AS(refined_matching(3, 2), NotDivisibleError);
    try {
        refined_matching(3, 2);
    } catch (const NotDivisibleError& e) {
        CHECK(e.s == 3);
        CHECK(e.m == 2);
    }
    CHECK_THROWS_AS(refined_matching(0, 1), std::domain_error);
}
