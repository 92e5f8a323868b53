#include "oracles.hpp"

#include "ed2/numtheory.hpp"

#include <algorithm>
#include <set>

namespace ed2::oracle {

const std::vector<DegreeSnapshot>& degree_snapshots()
{
    static const std::vector<DegreeSnapshot> v = {
        {"gl(n=1,q=5)", 4, {{1, 4}}},
        {"gl(n=2,q=5)", 32, {{1, 8}, {2, 6}}},
        {"gl(n=3,q=5)", 128, {{1, 32}, {2, 24}}},
        {"gl(n=4,q=5)", 2048, {{1, 16}, {2, 28}, {4, 60}, {8, 15}}},
        {"gl(n=1,q=13)", 4, {{1, 4}}},
        {"gl(n=2,q=13)", 32, {{1, 8}, {2, 6}}},
        {"gl(n=3,q=13)", 128, {{1, 32}, {2, 24}}},
        {"gl(n=4,q=13)", 2048, {{1, 16}, {2, 28}, {4, 60}, {8, 15}}},
        {"gl(n=2,q=3)", 16, {{1, 4}, {2, 3}}},
        {"gl(n=3,q=3)", 32, {{1, 8}, {2, 6}}},
        {"gl(n=4,q=3)", 512, {{1, 8}, {2, 6}, {4, 18}, {8, 3}}},
        {"gl(n=2,q=7)", 32, {{1, 4}, {2, 7}}},
        {"gl(n=3,q=7)", 64, {{1, 8}, {2, 14}}},
        {"gl(n=4,q=7)", 2048, {{1, 8}, {2, 6}, {4, 42}, {8, 21}}},
        {"sl(n=2,q=5)", 8, {{1, 4}, {2, 1}}},
        {"sl(n=3,q=5)", 32, {{1, 8}, {2, 6}}},
        {"sl(n=4,q=5)", 512, {{1, 8}, {2, 14}, {4, 16}, {8, 3}}},
        {"sl(n=5,q=5)", 2048, {{1, 16}, {2, 28}, {4, 60}, {8, 15}}},
        {"pgl(n=2,q=5)", 8, {{1, 4}, {2, 1}}},
        {"pgl(n=3,q=5)", 32, {{1, 8}, {2, 6}}},
        {"pgl(n=4,q=5)", 512, {{1, 16}, {2, 12}, {4, 12}, {8, 4}}},
        {"psl(n=2,q=5,nprime=2)", 4, {{1, 4}}},
        {"psl(n=4,q=5,nprime=2)", 256, {{1, 8}, {2, 14}, {4, 8}, {8, 1}}},
        {"psl(n=4,q=5,nprime=4)", 128, {{1, 8}, {2, 6}, {4, 2}, {8, 1}}},
        {"d(order=2^3)", 8, {{1, 4}, {2, 1}}},
        {"q(order=2^3)", 8, {{1, 4}, {2, 1}}},
        {"d(order=2^4)", 16, {{1, 4}, {2, 3}}},
        {"sd(order=2^4)", 16, {{1, 4}, {2, 3}}},
        {"q(order=2^4)", 16, {{1, 4}, {2, 3}}},
        {"d(order=2^5)", 32, {{1, 4}, {2, 7}}},
        {"sd(order=2^5)", 32, {{1, 4}, {2, 7}}},
        {"q(order=2^5)", 32, {{1, 4}, {2, 7}}},
        {"d(order=2^6)", 64, {{1, 4}, {2, 15}}},
        {"sd(order=2^6)", 64, {{1, 4}, {2, 15}}},
        {"q(order=2^6)", 64, {{1, 4}, {2, 15}}},
    };
    return v;
}

const std::vector<EdExample>& ed_examples()
{
    static const std::vector<EdExample> v = {
        {GroupSpec::gl(3, 5), "trivial", 3},
        {GroupSpec::gl(2, 3), "s=3;gamma=3", 2},
        {GroupSpec::gl(3, 3), "s=3;gamma=3", 3},
        {GroupSpec::pgl(4, 5), "trivial", 8},
        {GroupSpec::pgl(6, 5), "trivial", 8},
        {GroupSpec::pgl(3, 5), "trivial", 2},
        {GroupSpec::sl(2, 5), "s=2;gamma=3;squares=auto:rational", 4},
        {GroupSpec::sl(2, 5), "s=2;gamma=;squares=auto:containsi", 2},
        {GroupSpec::sl(3, 5), "trivial", 2},
        {GroupSpec::sl(4, 5), "trivial", 4},
        {GroupSpec::sl(5, 5), "trivial", 4},
        {GroupSpec::sl(2, 13), "trivial", 2},
        {GroupSpec::sl_quotient(4, 4, 5), "trivial", 8},
        {GroupSpec::sl_quotient(4, 2, 5), "trivial", 4},
        {GroupSpec::sl_quotient(2, 2, 5), "trivial", 2},
        {GroupSpec::semidihedral(4), "trivial", 2},
        {GroupSpec::dihedral(4), "s=3;gamma=7", 2},
        {GroupSpec::quaternion(4), "s=3;gamma=3,5;squares=auto:realcyclo", 8},
    };
    return v;
}

std::vector<GroupSpec> acceptance_grid()
{
    std::vector<GroupSpec> v;
    for (int q : {5, 13})
        for (int n = 1; n <= 4; ++n)
            v.push_back(GroupSpec::gl(n, q));
    for (int q : {3, 7})
        for (int n = 2; n <= 4; ++n)
            v.push_back(GroupSpec::gl(n, q));
    for (int n = 2; n <= 5; ++n)
        v.push_back(GroupSpec::sl(n, 5));
    for (int n = 2; n <= 4; ++n)
        v.push_back(GroupSpec::pgl(n, 5));
    v.push_back(GroupSpec::sl_quotient(2, 2, 5));
    v.push_back(GroupSpec::sl_quotient(4, 2, 5));
    v.push_back(GroupSpec::sl_quotient(4, 4, 5));
    for (int s = 2; s <= 5; ++s) {
        v.push_back(GroupSpec::dihedral(s + 1));
        if (s >= 3)
            v.push_back(GroupSpec::semidihedral(s + 1));
        v.push_back(GroupSpec::quaternion(s + 1));
    }
    return v;
}

std::uint64_t gl_two_part(int n, std::int64_t q)
{
    std::uint64_t e = 0;
    std::uint64_t qk = 1;
    for (int k = 1; k <= n; ++k) {
        qk *= static_cast<std::uint64_t>(q);
        std::uint64_t f = qk - 1;
        while (f % 2 == 0) {
            f /= 2;
            ++e;
        }
    }
    return std::uint64_t{1} << e;
}

bool minus_one_two_squares_mod(std::int64_t p)
{
    for (std::int64_t x = 0; x < p; ++x)
        for (std::int64_t y = 0; y < p; ++y)
            if ((x * x + y * y + 1) % p == 0)
                return true;
    return false;
}

std::vector<std::vector<int>> p2_sn_elements(int n)
{
    // P_2(S_n): block decomposition by binary digits, each block the iterated wreath product
    std::vector<std::vector<int>> gens;
    int start = 0;
    for (int bit = 30; bit >= 0; --bit) {
        const int size = 1 << bit;
        if (!(n & size))
            continue;
        for (int level = 1; (1 << level) <= size; ++level) {
            const int half = 1 << (level - 1);
            std::vector<int> p(n);
            for (int i = 0; i < n; ++i)
                p[i] = i;
            for (int i = 0; i < half; ++i)
                std::swap(p[start + i], p[start + half + i]);
            gens.push_back(p);
            for (int off = 2 * half; off < size; off += 2 * half) {
                std::vector<int> r(n);
                for (int i = 0; i < n; ++i)
                    r[i] = i;
                for (int i = 0; i < half; ++i)
                    std::swap(r[start + off + i], r[start + off + half + i]);
                gens.push_back(r);
            }
        }
        start += size;
    }
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i)
        id[i] = i;
    std::set<std::vector<int>> seen{id};
    std::vector<std::vector<int>> out{id};
    for (std::size_t h = 0; h < out.size(); ++h)
        for (const auto& g : gens) {
            std::vector<int> c(n);
            for (int i = 0; i < n; ++i)
                c[i] = g[out[h][i]];
            if (seen.insert(c).second)
                out.push_back(c);
        }
    return out;
}

std::size_t naive_orbit_size(const std::vector<std::int64_t>& a, int s, const std::vector<std::int64_t>& gamma,
                             bool diagonal, bool sign_twist)
{
    const int n = static_cast<int>(a.size());
    const std::int64_t M = std::int64_t{1} << s;
    const std::int64_t tw = s >= 2 ? M / 2 - 1 : 1;
    auto md = [M](std::int64_t x) { return ((x % M) + M) % M; };
    auto canon = [&](const std::vector<std::int64_t>& v) {
        std::set<std::vector<std::int64_t>> cands;
        for (auto g : gamma)
            for (std::int64_t x = 0; x < (diagonal ? M : 1); ++x) {
                std::vector<std::int64_t> w(n);
                for (int i = 0; i < n; ++i)
                    w[i] = md(v[i] * g + x);
                cands.insert(w);
            }
        return *cands.begin();
    };
    std::set<std::vector<std::int64_t>> orbit;
    const auto perms = p2_sn_elements(n);
    for (std::uint32_t mask = 0; mask < (sign_twist ? (1u << n) : 1u); ++mask)
        for (const auto& p : perms) {
            std::vector<std::int64_t> w(n);
            for (int j = 0; j < n; ++j)
                w[p[j]] = md(a[j] * ((mask >> j) & 1 ? tw : 1));
            orbit.insert(canon(w));
        }
    return orbit.size();
}

std::int64_t naive_min_faithful(const FiniteGroup& g, const CharacterTable& t)
{
    const std::size_t r = t.chars.size();
    std::int64_t best = -1;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
        std::int64_t dim = 0;
        for (std::size_t i = 0; i < r; ++i)
            if ((mask >> i) & 1)
                dim += t.chars[i].degree;
        if (best >= 0 && dim >= best)
            continue;
        bool faithful = true;
        for (std::uint32_t x = 1; x < g.order() && faithful; ++x) {
            const std::size_t c = t.classes.class_of[x];
            bool in_kernel = true;
            for (std::size_t i = 0; i < r && in_kernel; ++i)
                if ((mask >> i) & 1)
                    in_kernel = t.chars[i].class_values[c] == CycInt(t.chars[i].class_values[c].modulus(), t.chars[i].degree);
            faithful = !in_kernel;
        }
        if (faithful)
            best = dim;
    }
    return best;
}

}  // namespace ed2::oracle
