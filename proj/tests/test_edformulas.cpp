#include "ed2/edformulas.hpp"
#include "ed2/error.hpp"
#include "oracles.hpp"

#include "doctest.h"

using namespace ed2;

TEST_CASE("closed-form examples")
{
    for (const auto& ex : oracle::ed_examples()) {
        CAPTURE(ex.spec.to_string());
        CAPTURE(ex.field);
        const auto ctx = FieldContext::parse(ex.field, ex.spec.natural_s());
        const auto r = evaluate(ex.spec, ctx);
        CHECK(r.value == ex.value);
        CHECK_FALSE(r.case_tag.empty());
    }
}

TEST_CASE("power-of-two PSL branch at t = 2 is flagged")
{
    const auto ctx = FieldContext::trivial(2);
    const auto r = ed_sl_quotient(4, 2, 5, ctx);
    CHECK(r.value == 4);
    CHECK(r.extrapolated);
    CHECK(ed_sl_quotient(4, 4, 5, ctx).extrapolated);
    CHECK_FALSE(ed_sl_quotient(8, 2, 5, FieldContext::trivial(2)).extrapolated);
    CHECK_FALSE(ed_gl(3, 5, ctx).extrapolated);
}

TEST_CASE("wreath products")
{
    CHECK(ed_wreath(1, 3) == 3);
    CHECK(ed_wreath(2, 1) == 2);
    CHECK(ed_wreath(2, 4) == 8);
}

TEST_CASE("GL over a splitting field is n")
{
    for (int n = 1; n <= 12; ++n)
        CHECK(ed_gl(n, 5, FieldContext::trivial(2)).value == n);
}

TEST_CASE("hypotheses are enforced")
{
    CHECK_THROWS_AS(evaluate(GroupSpec::sl_quotient(4, 3, 5), FieldContext::trivial(2)), Error);
    CHECK_THROWS_AS(evaluate(GroupSpec::gl(0, 5), FieldContext::trivial(2)), Error);
    CHECK_THROWS_AS(evaluate(GroupSpec::gl(2, 4), FieldContext::trivial(2)), Error);
    CHECK_THROWS_AS(parse_family("spin"), Error);
    CHECK(parse_family("psl") == Family::SLQuotient);
    CHECK(parse_family("gl") == Family::GL);
}

TEST_CASE("natural exponent")
{
    CHECK(GroupSpec::gl(2, 5).natural_s() == 2);
    CHECK(GroupSpec::gl(2, 7).natural_s() == 4);
    CHECK(GroupSpec::quaternion(4).natural_s() == 3);
}
