#pragma once

#include "ed2/edformulas.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace ed2 {

using Perm = std::vector<std::uint8_t>;

struct SylowElement {
    std::vector<std::int32_t> torus;
    std::vector<std::uint8_t> signs;
    Perm perm;
    std::uint8_t extra = 0;

    std::string key() const;
    std::string to_string() const;
    bool operator==(const SylowElement&) const = default;
};

// Shape of (H^N / D) x| P_2(S_N) [x Z/2], H = Z/2^s or a D/SD/Q factor.
struct SylowLayout {
    int blocks = 0;
    int s = 2;
    bool has_signs = false;
    std::uint32_t twist = 1;
    std::uint32_t cocycle = 0;
    bool has_extra = false;
    // quotient by multiples of diag_step*(1,...,1); 0 means no quotient
    std::uint32_t diag_step = 0;
};

enum class Constraint { None, SLq1, SLq3 };

std::vector<Perm> p2_sn_generators(int N);
std::vector<std::vector<int>> block_orbits(int N);
int perm_sign(const Perm& p);
Perm perm_compose(const Perm& a, const Perm& b);
std::uint64_t perm_closure_order(const std::vector<Perm>& gens, int N);

class SylowGroup {
public:
    struct Enumeration {
        std::vector<SylowElement> elements;
        std::unordered_map<std::string, std::uint32_t> index;
        std::uint32_t find(const SylowElement& e) const;
    };

    SylowGroup(GroupSpec spec, int s, SylowLayout layout, Constraint constraint, std::vector<SylowElement> gens,
               std::uint64_t expected_order, std::string note);

    const GroupSpec& spec() const { return spec_; }
    int s() const { return s_; }
    const SylowLayout& layout() const { return layout_; }
    Constraint constraint() const { return constraint_; }
    const std::vector<SylowElement>& generators() const { return gens_; }
    std::uint64_t expected_order() const { return expected_; }
    const std::string& note() const { return note_; }

    SylowElement identity() const;
    SylowElement multiply(const SylowElement& a, const SylowElement& b) const;
    SylowElement inverse(const SylowElement& a) const;
    SylowElement power(const SylowElement& a, std::uint64_t k) const;
    SylowElement canonical(SylowElement a) const;
    int element_order(const SylowElement& a) const;
    bool satisfies_constraint(const SylowElement& a) const;
    // +1/-1 determinant of an element of the ambient q = 3 mod 4 GL Sylow
    int det_q3(const SylowElement& a) const;

    // memoized; throws BoundExceeded above max_group_order()
    const Enumeration& enumerate() const;
    std::uint64_t order() const { return enumerate().elements.size(); }

    SylowElement make_torus(const std::vector<std::int64_t>& t) const;

private:
    struct Memo;
    GroupSpec spec_;
    int s_;
    SylowLayout layout_;
    Constraint constraint_;
    std::vector<SylowElement> gens_;
    std::uint64_t expected_;
    std::string note_;
    std::shared_ptr<Memo> memo_;
};

std::uint64_t max_group_order();

std::uint64_t sylow_order_formula(const GroupSpec& spec);
SylowGroup build_sylow(const GroupSpec& spec);
SylowGroup build_sylow(const GroupSpec& spec, int s);
// bare wreath-type group with no constraint, for tests and the orbit cross-checks
SylowGroup build_layout_group(const SylowLayout& layout, const std::string& label);

std::vector<SylowElement> center(const SylowGroup& g);
int center_2rank(const SylowGroup& g);

// Sylow(SL_n) ~ Sylow(GL_{n-1}) for odd n, checked by an explicit homomorphism
bool check_odd_sl_isomorphism(int n, std::int64_t q);

struct RelationReport {
    bool ok = true;
    std::string detail;
};
// SD/D/Q presentation relations on each block factor of the group
RelationReport check_block_relations(const SylowGroup& g);

}  // namespace ed2
