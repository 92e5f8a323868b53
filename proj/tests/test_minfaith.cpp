#include "ed2/error.hpp"
#include "ed2/minfaith.hpp"
#include "oracles.hpp"

#include "doctest.h"

using namespace ed2;

TEST_CASE("small examples")
{
    const auto q8 = build_sylow(GroupSpec::quaternion(3));
    const auto c = min_faithful_dim_split(q8);
    CHECK(c.total_dim == 2);
    CHECK(c.rank == 1);
    CHECK(c.kernel_trivial);
    CHECK(c.restriction_faithful);
    CHECK(c.witness_nonsingular);

    const FiniteGroup v4(4, [](std::uint32_t a, std::uint32_t b) { return a ^ b; }, {1, 2});
    const auto t = character_table(v4);
    const auto cv = min_faithful_dim_split(v4, t);
    CHECK(cv.total_dim == 2);
    CHECK(cv.rank == 2);
    CHECK(cv.dims == std::vector<std::int64_t>{1, 1});

    CHECK(min_faithful_dim_split(build_sylow(GroupSpec::gl(2, 5))).total_dim == 2);
}

TEST_CASE("greedy optimum against subset enumeration")
{
    for (const auto& spec : {GroupSpec::quaternion(3), GroupSpec::dihedral(4), GroupSpec::semidihedral(4),
                             GroupSpec::gl(1, 5), GroupSpec::gl(2, 3), GroupSpec::sl(2, 5), GroupSpec::pgl(2, 5),
                             GroupSpec::sl_quotient(2, 2, 5)}) {
        CAPTURE(spec.to_string());
        const auto fg = FiniteGroup::from_sylow(build_sylow(spec));
        const auto t = character_table(fg);
        const auto c = min_faithful_dim_split(fg, t);
        CHECK(c.total_dim == oracle::naive_min_faithful(fg, t));
        CHECK(c.total_dim == min_faithful_exhaustive(fg, t));
    }
}

TEST_CASE("kernel and restriction to Z(G)[2]")
{
    const auto fg = FiniteGroup::from_sylow(build_sylow(GroupSpec::gl(2, 5)));
    const auto t = character_table(fg);
    const auto z = central_two_torsion(fg);
    const auto c = min_faithful_dim_split(fg, t);
    CHECK(kernel_classes(t, c.chosen).size() == 1);
    CHECK(restriction_to_center2_faithful(t, z, c.chosen));
    std::size_t trivial = 0;
    for (std::size_t i = 0; i < t.chars.size(); ++i)
        if (t.chars[i].degree == 1 && t.chars[i].class_values == std::vector<CycInt>(t.classes.count(), CycInt(t.chars[i].class_values[0].modulus(), 1)))
            trivial = i;
    CHECK(kernel_classes(t, {trivial}).size() == t.classes.count());
    CHECK_FALSE(restriction_to_center2_faithful(t, z, {trivial}));
    CHECK(c.to_json().find("\"total_dim\"") != std::string::npos);
}

TEST_CASE("Gamma-orbit dimensions")
{
    const auto triv = FieldContext::trivial(3);
    for (const auto& o : gamma_orbit_dims({{1}, {2}, {3}, {0}}, triv)) {
        CHECK(o.members.size() == 1);
        CHECK(o.k_dimension == 1);
    }
    const auto ctx = FieldContext::make(3, {7}, SquaresMode::forced(false));
    const auto orbs = gamma_orbit_dims({{1}, {7}, {2}, {6}}, ctx);
    REQUIRE(orbs.size() == 2);
    CHECK(orbs[0].members == std::vector<std::vector<std::int64_t>>{{1}, {7}});
    CHECK(orbs[0].conductor == 8);
    CHECK(orbs[0].k_dimension == 2);
    CHECK(orbs[1].conductor == 4);
    CHECK(orbs[1].k_dimension == 2);
    CHECK(induced_k_dimension(4, 8, ctx) == 8);
    CHECK(induced_k_dimension(4, 2, ctx) == 4);
}

TEST_CASE("rationalized induced representations")
{
    const auto c2 = FieldContext::make(2, {3}, SquaresMode::forced(false));
    const auto r = rationalize_induced(Rationalization::FaithRep, 4, c2);
    CHECK(r.ok());
    CHECK(r.entries_fixed);
    CHECK(r.relations_ok);
    CHECK(r.faithful);
    CHECK(r.k_dimension == 8);
    CHECK(r.lemma_dimension == 8);

    const auto c3 = FieldContext::make(3, {3}, SquaresMode::forced(false));
    const auto r2 = rationalize_induced(Rationalization::FaithRep2, 2, c3);
    CHECK(r2.ok());
    CHECK(r2.k_dimension == 4);
    CHECK(r2.fixed_unit == 3);

    const auto c7 = FieldContext::make(3, {7}, SquaresMode::forced(false));
    CHECK(rationalize_induced(Rationalization::FaithRep, 2, c7).ok());
    CHECK(rationalize_induced(Rationalization::FaithRep1, 2, c7).ok());
    CHECK_THROWS_AS(rationalize_induced(Rationalization::FaithRep1, 2, c3), Error);
    CHECK(rationalization_name(Rationalization::FaithRep2) == "faithrep2");
}

TEST_CASE("rationalization preconditions")
{
    const auto c3 = FieldContext::make(3, {3}, SquaresMode::forced(false));
    CHECK_THROWS_AS(rationalize_induced(Rationalization::FaithRep, 3, c3), Error);
    CHECK_THROWS_AS(rationalize_induced(Rationalization::FaithRep, 2, c3), Error);
    CHECK_THROWS_AS(rationalize_induced(Rationalization::FaithRep2, 2, FieldContext::trivial(3)), Error);
}
