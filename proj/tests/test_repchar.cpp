#include "ed2/repchar.hpp"
#include "oracles.hpp"

#include "doctest.h"

#include <algorithm>
#include <map>

using namespace ed2;

namespace {

std::vector<GroupSpec> snapshot_specs()
{
    std::vector<GroupSpec> v;
    for (std::int64_t q : {3, 5, 7, 13})
        for (int n = 1; n <= 4; ++n)
            v.push_back(GroupSpec::gl(n, q));
    for (int n = 2; n <= 5; ++n)
        v.push_back(GroupSpec::sl(n, 5));
    for (int n = 2; n <= 4; ++n)
        v.push_back(GroupSpec::pgl(n, 5));
    v.push_back(GroupSpec::sl_quotient(2, 2, 5));
    v.push_back(GroupSpec::sl_quotient(4, 2, 5));
    v.push_back(GroupSpec::sl_quotient(4, 4, 5));
    for (int m = 3; m <= 6; ++m) {
        v.push_back(GroupSpec::dihedral(m));
        v.push_back(GroupSpec::semidihedral(m));
        v.push_back(GroupSpec::quaternion(m));
    }
    return v;
}

std::vector<std::pair<std::int64_t, int>> histogram(const CharacterTable& t)
{
    std::map<std::int64_t, int> h;
    for (auto d : degree_multiset(t))
        ++h[d];
    return {h.begin(), h.end()};
}

}  // namespace

TEST_CASE("conjugacy classes of Q8")
{
    const auto fg = FiniteGroup::from_sylow(build_sylow(GroupSpec::quaternion(3)));
    const auto cls = conjugacy_classes(fg);
    auto sizes = cls.sizes;
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::uint64_t>{1, 1, 2, 2, 2});
    CHECK(fg.center().size() == 2);
    CHECK(fg.commutator_subgroup().size() == 2);
    CHECK(fg.exponent() == 4);
}

TEST_CASE("degree multisets against frozen snapshots")
{
    const auto specs = snapshot_specs();
    for (const auto& snap : oracle::degree_snapshots()) {
        CAPTURE(snap.group);
        auto it = std::find_if(specs.begin(), specs.end(),
                               [&](const GroupSpec& s) { return s.to_string() == snap.group; });
        REQUIRE(it != specs.end());
        const auto t = character_table(build_sylow(*it));
        CHECK(t.group_order == snap.order);
        CHECK(histogram(t) == snap.degrees);
        std::uint64_t sum = 0;
        for (auto d : degree_multiset(t))
            sum += static_cast<std::uint64_t>(d * d);
        CHECK(sum == snap.order);
    }
}

TEST_CASE("orthogonality and Galois stability")
{
    for (const auto& spec : {GroupSpec::gl(2, 5), GroupSpec::sl(4, 5), GroupSpec::semidihedral(5),
                             GroupSpec::sl_quotient(4, 4, 5)}) {
        CAPTURE(spec.to_string());
        const auto t = character_table(build_sylow(spec));
        CHECK(check_orthogonality(t));
        CHECK(check_galois_stability(t));
    }
}

TEST_CASE("closed-form D, SD, Q tables")
{
    for (int s = 2; s <= 5; ++s) {
        for (auto [fam, spec] : {std::pair{SmallFamily::D, GroupSpec::dihedral(s + 1)},
                                 std::pair{SmallFamily::SD, GroupSpec::semidihedral(s + 1)},
                                 std::pair{SmallFamily::Q, GroupSpec::quaternion(s + 1)}}) {
            if (fam == SmallFamily::SD && s < 3)
                continue;
            CAPTURE(spec.to_string());
            const auto fg = FiniteGroup::from_sylow(build_sylow(spec));
            const auto t = character_table(fg);
            const auto known = known_table_on(fam, s, fg, t.classes);
            CHECK(known.size() == known_table(fam, s).size());
            CHECK(tables_match_up_to_permutation(t.chars, known));
            CHECK(linear_character_count(t) == 4);
        }
    }
}

TEST_CASE("restriction and Clifford theory on a cyclic subgroup of index 2")
{
    const auto fg = FiniteGroup::from_sylow(build_sylow(GroupSpec::quaternion(4)));
    const auto t = character_table(fg);
    std::uint32_t x = 0;
    for (std::uint32_t e = 0; e < fg.order(); ++e)
        if (fg.element_order(e) == 8)
            x = e;
    const auto n = fg.closure({x});
    REQUIRE(n.size() == 8);
    CHECK(fg.is_normal(n));
    const auto h = fg.subgroup(n);
    const auto hcls = conjugacy_classes(h);
    for (std::size_t i = 0; i < t.chars.size(); ++i) {
        const auto rep = clifford_check(fg, t, n, i);
        CHECK(rep.ok());
        const auto res = restrict_character(t.chars[i], t.classes, h, hcls);
        CHECK(res[hcls.class_of[0]] == CycInt(res[0].modulus(), t.chars[i].degree));
    }
}

TEST_CASE("central characters on Z(G)[2]")
{
    const auto fg = FiniteGroup::from_sylow(build_sylow(GroupSpec::quaternion(3)));
    const auto t = character_table(fg);
    const auto z = central_two_torsion(fg);
    REQUIRE(z.rank() == 1);
    for (const auto& chi : t.chars)
        CHECK(central_character(chi, t.classes, z) == std::vector<std::uint8_t>{static_cast<std::uint8_t>(chi.degree == 2)});

    const auto pgl4 = FiniteGroup::from_sylow(build_sylow(GroupSpec::pgl(4, 5)));
    CHECK(central_two_torsion(pgl4).rank() == 1);
}

TEST_CASE("quaternion idempotents")
{
    for (int s = 2; s <= 5; ++s)
        CHECK(quaternion_idempotent_check(s));
}
