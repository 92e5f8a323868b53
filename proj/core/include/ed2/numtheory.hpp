#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ed2 {

int v2(std::uint64_t n);
int xi2(std::uint64_t n);
int mu2(std::uint64_t n);
int compute_s(std::int64_t q);

std::int64_t mod_pow2(std::int64_t a, int s);
std::uint64_t pow_u64(std::uint64_t b, unsigned e);
bool is_pow2(std::uint64_t n);

struct SubgroupLabel {
    enum class Kind { Full, Cyclic5, CyclicNeg5, Trivial, MinusOne };
    Kind kind = Kind::Trivial;
    int i = 0;

    std::string to_string() const;
    bool operator==(const SubgroupLabel&) const = default;
};

// Subgroup of (Z/2^s)^x.
struct UnitSubgroup {
    int s = 0;
    std::vector<std::uint32_t> elements;
    SubgroupLabel label;

    std::uint32_t modulus() const { return 1u << s; }
    std::size_t size() const { return elements.size(); }
    bool contains(std::int64_t u) const;
    bool is_trivial() const { return elements.size() == 1; }
    std::string generators_string() const;
    bool operator==(const UnitSubgroup& o) const { return s == o.s && elements == o.elements; }
};

UnitSubgroup subgroup_from_generators(int s, const std::vector<std::int64_t>& gens);
UnitSubgroup subgroup_from_label(int s, const SubgroupLabel& label);
std::vector<UnitSubgroup> all_unit_subgroups(int s);
UnitSubgroup trivial_subgroup(int s);
UnitSubgroup full_unit_group(int s);
UnitSubgroup reduce_subgroup(const UnitSubgroup& g, int s2);

bool contains_minus_one(const UnitSubgroup& g);
bool contains_half_twist(const UnitSubgroup& g);
std::uint32_t half_twist(int s);

std::uint64_t gl_sylow_order(int n, std::int64_t q);
std::uint64_t gl_order_two_part_direct(int n, std::int64_t q);

}  // namespace ed2
