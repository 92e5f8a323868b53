#include "ed2/error.hpp"
#include "ed2/sylow.hpp"
#include "oracles.hpp"

#include "doctest.h"

#include <set>

using namespace ed2;

TEST_CASE("P_2(S_N) orders")
{
    CHECK(perm_closure_order(p2_sn_generators(2), 2) == 2);
    CHECK(perm_closure_order(p2_sn_generators(4), 4) == 8);
    CHECK(perm_closure_order(p2_sn_generators(6), 6) == 16);
    CHECK(perm_closure_order(p2_sn_generators(8), 8) == 128);
    for (int n : {2, 3, 4, 5, 6, 7}) {
        std::set<std::vector<int>> ref;
        for (const auto& p : oracle::p2_sn_elements(n))
            ref.insert(p);
        CHECK(perm_closure_order(p2_sn_generators(n), n) == ref.size());
    }
}

TEST_CASE("block decomposition by binary digits")
{
    const auto b = block_orbits(6);
    REQUIRE(b.size() == 2);
    CHECK(b[0] == std::vector<int>{0, 1, 2, 3});
    CHECK(b[1] == std::vector<int>{4, 5});
}

TEST_CASE("enumerated order matches the formula")
{
    for (const auto& spec : oracle::acceptance_grid()) {
        if (sylow_order_formula(spec) > 2048)
            continue;
        CAPTURE(spec.to_string());
        const auto g = build_sylow(spec);
        CHECK(g.order() == g.expected_order());
        CHECK(g.order() == sylow_order_formula(spec));
    }
}

TEST_CASE("group axioms on generators")
{
    const auto g = build_sylow(GroupSpec::sl(4, 5));
    const auto& e = g.enumerate();
    for (const auto& x : g.generators())
        for (const auto& y : e.elements) {
            CHECK(g.multiply(g.multiply(x, y), g.inverse(y)) == g.canonical(x));
            CHECK(g.satisfies_constraint(g.multiply(x, y)));
        }
}

TEST_CASE("centers")
{
    CHECK(center_2rank(build_sylow(GroupSpec::sl(2, 5))) == 1);
    CHECK(center_2rank(build_sylow(GroupSpec::sl(4, 5))) == 1);
    CHECK(center_2rank(build_sylow(GroupSpec::sl(6, 5))) == 2);
    CHECK(center(build_sylow(GroupSpec::pgl(4, 5))).size() == 2);
    CHECK(center(build_sylow(GroupSpec::quaternion(4))).size() == 2);
}

TEST_CASE("odd SL against GL of one size smaller")
{
    CHECK(check_odd_sl_isomorphism(3, 5));
    CHECK(check_odd_sl_isomorphism(5, 5));
    CHECK(check_odd_sl_isomorphism(3, 3));
}

TEST_CASE("D, SD and Q block relations")
{
    for (int m = 3; m <= 6; ++m) {
        CHECK(check_block_relations(build_sylow(GroupSpec::dihedral(m))).ok);
        CHECK(check_block_relations(build_sylow(GroupSpec::quaternion(m))).ok);
        if (m >= 4)
            CHECK(check_block_relations(build_sylow(GroupSpec::semidihedral(m))).ok);
    }
    CHECK(check_block_relations(build_sylow(GroupSpec::gl(2, 3))).ok);
}

TEST_CASE("bound on enumeration")
{
    CHECK_THROWS_AS(build_sylow(GroupSpec::gl(16, 5)).enumerate(), Error);
}
