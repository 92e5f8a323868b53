#include "ed2/numtheory.hpp"

#include "ed2/error.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace ed2 {

int v2(std::uint64_t n)
{
    require(n != 0, ErrorKind::InvalidArgument, "v2: valuation of 0 is undefined");
    return std::countr_zero(n);
}

int xi2(std::uint64_t n)
{
    require(n != 0, ErrorKind::InvalidArgument, "xi2: n must be positive");
    return std::popcount(n);
}

int mu2(std::uint64_t n)
{
    require(n != 0, ErrorKind::InvalidArgument, "mu2: n must be positive");
    return 63 - std::countl_zero(n);
}

bool is_pow2(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

int compute_s(std::int64_t q)
{
    require(q >= 3 && q % 2 != 0, ErrorKind::InvalidArgument,
            "compute_s: q must be an odd prime power >= 3, got " + std::to_string(q));
    if (q % 4 == 1)
        return v2(static_cast<std::uint64_t>(q - 1));
    return v2(static_cast<std::uint64_t>(q + 1)) + 1;
}

std::int64_t mod_pow2(std::int64_t a, int s)
{
    const std::int64_t m = std::int64_t{1} << s;
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::uint64_t pow_u64(std::uint64_t b, unsigned e)
{
    std::uint64_t r = 1;
    while (e--)
        r *= b;
    return r;
}

std::string SubgroupLabel::to_string() const
{
    switch (kind) {
    case Kind::Full:
        return "Full_" + std::to_string(i);
    case Kind::Cyclic5:
        return "Cyclic5_" + std::to_string(i);
    case Kind::CyclicNeg5:
        return "CyclicNeg5_" + std::to_string(i);
    case Kind::Trivial:
        return "Trivial";
    case Kind::MinusOne:
        return "MinusOne";
    }
    return "?";
}

bool UnitSubgroup::contains(std::int64_t u) const
{
    const auto r = static_cast<std::uint32_t>(mod_pow2(u, s));
    return std::binary_search(elements.begin(), elements.end(), r);
}

std::string UnitSubgroup::generators_string() const
{
    // every element listed; the text form round-trips through subgroup_from_generators
    std::ostringstream os;
    bool first = true;
    for (auto e : elements) {
        if (e == 1)
            continue;
        if (!first)
            os << ',';
        os << e;
        first = false;
    }
    return os.str();
}

namespace {

std::vector<std::uint32_t> closure(int s, const std::vector<std::int64_t>& gens)
{
    const std::uint64_t m = std::uint64_t{1} << s;
    std::set<std::uint32_t> elems{static_cast<std::uint32_t>(1 % m)};
    std::vector<std::uint32_t> frontier(elems.begin(), elems.end());
    std::vector<std::uint32_t> g;
    for (auto x : gens) {
        auto r = static_cast<std::uint32_t>(mod_pow2(x, s));
        require(r % 2 == 1 || s == 0, ErrorKind::InvalidArgument,
                "unit subgroup: generator " + std::to_string(x) + " is not odd");
        g.push_back(r);
    }
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (auto e : frontier)
            for (auto x : g) {
                auto p = static_cast<std::uint32_t>((std::uint64_t{e} * x) % m);
                if (elems.insert(p).second)
                    next.push_back(p);
            }
        frontier.swap(next);
    }
    return {elems.begin(), elems.end()};
}

std::vector<std::int64_t> label_generators(int s, const SubgroupLabel& l)
{
    const std::int64_t m = std::int64_t{1} << s;
    auto pow5 = [&](int i) {
        std::int64_t e = 5 % m;
        for (int k = 0; k < i; ++k)
            e = (e * e) % m;
        return e;
    };
    switch (l.kind) {
    case SubgroupLabel::Kind::Trivial:
        return {};
    case SubgroupLabel::Kind::MinusOne:
        return {m - 1};
    case SubgroupLabel::Kind::Full:
        return {pow5(l.i), m - 1};
    case SubgroupLabel::Kind::Cyclic5:
        return {pow5(l.i)};
    case SubgroupLabel::Kind::CyclicNeg5:
        return {m - pow5(l.i)};
    }
    return {};
}

std::vector<SubgroupLabel> lattice_labels(int s)
{
    using K = SubgroupLabel::Kind;
    std::vector<SubgroupLabel> out{{K::Trivial, 0}};
    if (s <= 1)
        return out;
    out.push_back({K::MinusOne, 0});
    if (s == 2)
        return out;
    for (int i = 0; i <= s - 3; ++i) {
        out.push_back({K::Full, i});
        out.push_back({K::Cyclic5, i});
        out.push_back({K::CyclicNeg5, i});
    }
    return out;
}

SubgroupLabel match_label(int s, const std::vector<std::uint32_t>& elems)
{
    for (const auto& l : lattice_labels(s))
        if (closure(s, label_generators(s, l)) == elems)
            return l;
    fail(ErrorKind::InvalidArgument, "unit subgroup: no lattice label matches (internal)");
}

}  // namespace

UnitSubgroup subgroup_from_generators(int s, const std::vector<std::int64_t>& gens)
{
    require(s >= 1 && s <= 30, ErrorKind::InvalidArgument, "unit subgroup: s out of range");
    UnitSubgroup g;
    g.s = s;
    g.elements = closure(s, gens);
    g.label = match_label(s, g.elements);
    return g;
}

UnitSubgroup subgroup_from_label(int s, const SubgroupLabel& label)
{
    UnitSubgroup g = subgroup_from_generators(s, label_generators(s, label));
    require(g.label == label, ErrorKind::InvalidArgument,
            "unit subgroup: label " + label.to_string() + " is not canonical for s=" + std::to_string(s));
    return g;
}

std::vector<UnitSubgroup> all_unit_subgroups(int s)
{
    std::vector<UnitSubgroup> out;
    for (const auto& l : lattice_labels(s))
        out.push_back(subgroup_from_label(s, l));
    return out;
}

UnitSubgroup trivial_subgroup(int s) { return subgroup_from_generators(s, {}); }

UnitSubgroup full_unit_group(int s)
{
    if (s <= 1)
        return trivial_subgroup(s);
    if (s == 2)
        return subgroup_from_generators(s, {3});
    return subgroup_from_generators(s, {5, -1});
}

UnitSubgroup reduce_subgroup(const UnitSubgroup& g, int s2)
{
    require(s2 >= 1 && s2 <= g.s, ErrorKind::InvalidArgument, "reduce_subgroup: bad target exponent");
    std::vector<std::int64_t> gens(g.elements.begin(), g.elements.end());
    return subgroup_from_generators(s2, gens);
}

bool contains_minus_one(const UnitSubgroup& g) { return g.contains((std::int64_t{1} << g.s) - 1); }

std::uint32_t half_twist(int s)
{
    require(s >= 2, ErrorKind::InvalidArgument, "half_twist: s must be >= 2");
    return (1u << (s - 1)) - 1;
}

bool contains_half_twist(const UnitSubgroup& g)
{
    const std::uint32_t t = half_twist(g.s);
    if (g.s > 2) {
        const std::int64_t m = std::int64_t{1} << g.s;
        std::int64_t p = 5;
        for (int k = 0; k < g.s - 3; ++k)
            p = (p * p) % m;
        require(mod_pow2(-p, g.s) == t, ErrorKind::InvalidArgument,
                "contains_half_twist: self-check 2^{s-1}-1 == -5^{2^{s-3}} failed");
    }
    return g.contains(t);
}

std::uint64_t gl_sylow_order(int n, std::int64_t q)
{
    require(n >= 1, ErrorKind::InvalidArgument, "gl_sylow_order: n must be positive");
    const int s = compute_s(q);
    int e = 0;
    auto vfact = [](int k) {
        int r = 0;
        for (int i = 2; i <= k; ++i)
            r += v2(static_cast<std::uint64_t>(i));
        return r;
    };
    if (q % 4 == 1) {
        e = s * n + vfact(n);
    } else {
        const int m = n / 2;
        e = vfact(m) + (s + 1) * m + (n % 2);
    }
    require(e < 64, ErrorKind::BoundExceeded, "gl_sylow_order: order exceeds 2^63");
    return std::uint64_t{1} << e;
}

std::uint64_t gl_order_two_part_direct(int n, std::int64_t q)
{
    require(n >= 1 && q >= 3 && q % 2 == 1, ErrorKind::InvalidArgument, "gl_order_two_part_direct: bad input");
    // |GL_n(F_q)| = q^{n(n-1)/2} prod_{k=1}^{n} (q^k - 1); q odd so only the second product matters
    int e = 0;
    for (int k = 1; k <= n; ++k) {
        const std::uint64_t qk = pow_u64(static_cast<std::uint64_t>(q), static_cast<unsigned>(k));
        e += v2(qk - 1);
    }
    require(e < 64, ErrorKind::BoundExceeded, "gl_order_two_part_direct: order exceeds 2^63");
    return std::uint64_t{1} << e;
}

}  // namespace ed2
