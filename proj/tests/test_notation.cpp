#include <doctest.h>

#include "nonef/modarith.hpp"
#include "nonef/notation.hpp"

using namespace nonef;

TEST_CASE("parse basic notation") {
    CHECK(parse_class("10;6,3,3,3,3,3,3") == DivisorClass(10, {6, 3, 3, 3, 3, 3, 3}));
    CHECK(parse_class("10;6,3^6") == DivisorClass(10, {6, 3, 3, 3, 3, 3, 3}));
    CHECK(parse_class("1;") == DivisorClass(1, {}));
    CHECK(parse_class("-3;-1^4") == DivisorClass(-3, {-1, -1, -1, -1}));
    CHECK(parse_class(" 4 ; 2 , 1 ^ 12 ") == parse_class("4;2,1^12"));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_class("4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_class("4;2,"), std::invalid_argument);
    CHECK_THROWS_AS(parse_class("4;2^0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_class("x;2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_class("4;2 2"), std::invalid_argument);
}

TEST_CASE("format round-trip") {
    fp::Rng rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        DivisorClass c(static_cast<i64>(rng.below(200)) - 100,
                       std::vector<i64>(rng.below(20), 0));
        for (auto& m : c.mults) m = static_cast<i64>(rng.below(200)) - 100;
        REQUIRE(parse_class(format_class(c)) == c);
    }
}

TEST_CASE("normalized display") {
    CHECK(format_class_normalized(parse_class("4;0,1,0,1,1,1,1,1")) == "4;1,1,1,1,1,1");
    CHECK(format_class_normalized(parse_class("1;0,0")) == "1;");
}
