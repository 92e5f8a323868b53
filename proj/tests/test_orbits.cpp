#include "ed2/error.hpp"
#include "ed2/orbits.hpp"
#include "oracles.hpp"

#include "doctest.h"

using namespace ed2;

namespace {

std::vector<std::vector<std::int64_t>> all_vectors(int n, int s)
{
    const std::int64_t M = std::int64_t{1} << s;
    std::vector<std::vector<std::int64_t>> out{{}};
    for (int i = 0; i < n; ++i) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& v : out)
            for (std::int64_t x = 0; x < M; ++x) {
                auto w = v;
                w.push_back(x);
                next.push_back(std::move(w));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<std::int64_t> as_i64(const UnitSubgroup& g)
{
    return {g.elements.begin(), g.elements.end()};
}

}  // namespace

TEST_CASE("orbit size examples")
{
    CHECK(orbit_size({1, 0}, {2, 2, OrbitTarget::PlainVector, 0, std::nullopt}) == 2);
    CHECK(orbit_size({0, 0, 0, 0}, {4, 3, OrbitTarget::SignTwisted, 0, full_unit_group(3)}) == 1);
    CHECK(orbit_size({1, 0, 1, 0}, {4, 2, OrbitTarget::DiagonalQuotient, 2, std::nullopt}) == 4);
    CHECK(orbit_canonical({3, 1}, {2, 2, OrbitTarget::DiagonalQuotient, 2, std::nullopt}) ==
          std::vector<std::int64_t>{0, 2});
    CHECK_THROWS_AS(orbit_size(std::vector<std::int64_t>(11, 0), {11, 2, OrbitTarget::PlainVector, 0, std::nullopt}),
                    Error);
}

TEST_CASE("orbit sizes against full group enumeration")
{
    for (int n = 1; n <= 4; ++n)
        for (int s = 2; s <= 3; ++s) {
            if (n == 4 && s == 3)
                continue;
            for (const auto& g : all_unit_subgroups(s))
                for (auto target : {OrbitTarget::PlainVector, OrbitTarget::DiagonalQuotient,
                                    OrbitTarget::GammaQuotient, OrbitTarget::SignTwisted}) {
                    if (target == OrbitTarget::PlainVector && !g.is_trivial())
                        continue;
                    const OrbitActionSpec spec{n, s, target, 0, g};
                    CAPTURE(spec.to_string());
                    for (const auto& a : all_vectors(n, s)) {
                        const auto sz = orbit_size(a, spec);
                        CHECK(sz == oracle::naive_orbit_size(a, s, as_i64(g), target == OrbitTarget::DiagonalQuotient,
                                                             target == OrbitTarget::SignTwisted));
                        CHECK((sz & (sz - 1)) == 0);
                    }
                }
        }
}

TEST_CASE("quotient orbits never exceed plain orbits")
{
    const OrbitActionSpec plain{4, 3, OrbitTarget::PlainVector, 0, std::nullopt};
    const OrbitActionSpec quot{4, 3, OrbitTarget::GammaQuotient, 0, full_unit_group(3)};
    for (const auto& a : all_vectors(4, 3))
        CHECK(orbit_size(a, quot) <= orbit_size(a, plain));
}

TEST_CASE("orbits of characters equal orbits of labels")
{
    for (auto [n, s] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
        const OrbitActionSpec spec{n, s, OrbitTarget::PlainVector, 0, std::nullopt};
        for (const auto& a : all_vectors(n, s))
            CHECK(representation_orbit_size(a, s) == orbit_size(a, spec));
    }
}

TEST_CASE("lemma scan examples")
{
    const auto h1 = verify_orbit_lemma(OrbitLemma::IrrH1, {2, 2, std::nullopt, std::nullopt, std::nullopt});
    CHECK(h1.ok());
    CHECK(h1.min_achieved == 2);
    CHECK(h1.bound == 2);

    const auto ga = verify_orbit_lemma(OrbitLemma::GammaAction, {4, 2, trivial_subgroup(2), std::nullopt, std::nullopt});
    CHECK(ga.ok());
    CHECK(ga.count_scanned > 0);

    const auto p1 = verify_orbit_lemma(OrbitLemma::IrrHPSLn1, {6, 2, std::nullopt, 2, 1});
    CHECK(p1.ok());
    CHECK(p1.bound == 8);
    CHECK(p1.min_achieved >= 8);

    const auto p3 = verify_orbit_lemma(OrbitLemma::IrrHPSLn3, {4, 2, std::nullopt, std::nullopt, std::nullopt});
    CHECK(p3.ok());
    CHECK(p3.min_achieved == 4);
    CHECK(p3.to_json().find("\"schema\":1") != std::string::npos);
}

TEST_CASE("irrH1 partition scan agrees with the exhaustive scan")
{
    for (auto [n, s] : {std::pair{4, 2}, std::pair{4, 3}, std::pair{8, 2}, std::pair{2, 4}}) {
        CAPTURE(n);
        CAPTURE(s);
        const auto p = irrh1_partition_scan(n, s);
        const auto e = irrh1_exhaustive_scan(n, s);
        CHECK(p.min_achieved == e.min_achieved);
        CHECK(p.bound == e.bound);
        CHECK(p.violations.empty());
        CHECK(e.violations.empty());
    }
}

TEST_CASE("lemma names")
{
    for (auto l : {OrbitLemma::IrrH1, OrbitLemma::IrrH2, OrbitLemma::IrrH2Prime, OrbitLemma::GammaAction, OrbitLemma::Irr,
                   OrbitLemma::IrrHPSLn3, OrbitLemma::IrrHPSLn1})
        CHECK(parse_orbit_lemma(orbit_lemma_name(l)) == l);
    CHECK(parse_orbit_lemma("irrH2'") == OrbitLemma::IrrH2Prime);
    CHECK_THROWS_AS(parse_orbit_lemma("irrH9"), Error);
}
