#pragma once

#include "ed2/cycint.hpp"
#include "ed2/sylow.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace ed2 {

// Finite group on element indices 0..order-1 with 0 the identity.
class FiniteGroup {
public:
    using MulFn = std::function<std::uint32_t(std::uint32_t, std::uint32_t)>;

    FiniteGroup(std::uint32_t order, MulFn mul, std::vector<std::uint32_t> generators,
                std::function<std::string(std::uint32_t)> label = {});

    static FiniteGroup from_sylow(std::shared_ptr<const SylowGroup> g);
    static FiniteGroup from_sylow(const SylowGroup& g);

    std::uint32_t order() const { return order_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_(a, b); }
    std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
    std::uint32_t power(std::uint32_t a, std::uint64_t k) const;
    int element_order(std::uint32_t a) const { return ord_[a]; }
    int exponent() const { return exponent_; }
    const std::vector<std::uint32_t>& generators() const { return gens_; }
    std::string label(std::uint32_t a) const { return label_ ? label_(a) : std::to_string(a); }

    // subgroup on the given elements (must contain the identity and be closed); indices map back via parent_index
    FiniteGroup subgroup(const std::vector<std::uint32_t>& elements) const;
    std::vector<std::uint32_t> closure(const std::vector<std::uint32_t>& gens) const;
    const std::vector<std::uint32_t>& parent_index() const { return parent_; }
    bool is_normal(const std::vector<std::uint32_t>& elements) const;
    std::vector<std::uint32_t> center() const;
    std::vector<std::uint32_t> commutator_subgroup() const;

    // the structured group this was built from, if any
    std::shared_ptr<const SylowGroup> sylow() const { return sylow_; }

private:
    std::uint32_t order_;
    MulFn mul_;
    std::vector<std::uint32_t> gens_;
    std::function<std::string(std::uint32_t)> label_;
    std::vector<std::uint32_t> inv_;
    std::vector<int> ord_;
    int exponent_ = 1;
    std::vector<std::uint32_t> parent_;
    std::shared_ptr<const SylowGroup> sylow_;
    std::shared_ptr<const void> keepalive_;
};

struct ConjClassTable {
    std::vector<std::uint32_t> reps;
    std::vector<std::uint64_t> sizes;
    std::vector<std::uint32_t> class_of;
    std::vector<std::uint32_t> inverse_class;
    std::size_t count() const { return reps.size(); }
};

ConjClassTable conjugacy_classes(const FiniteGroup& g);

struct Character {
    std::vector<CycInt> class_values;
    std::int64_t degree = 0;
};

struct CharacterTable {
    ConjClassTable classes;
    std::vector<Character> chars;
    std::uint32_t modulus = 2;
    std::uint64_t prime = 0;
    std::uint64_t group_order = 0;
};

CharacterTable character_table(const FiniteGroup& g);
CharacterTable character_table(const SylowGroup& g);

// exact row orthogonality (1/|G|) sum |C| chi(c) conj(psi(c)) = delta
bool check_orthogonality(const CharacterTable& t);
std::vector<std::int64_t> degree_multiset(const CharacterTable& t);
std::size_t linear_character_count(const CharacterTable& t);
// u applied to every row gives a row of the table
bool check_galois_stability(const CharacterTable& t);

enum class SmallFamily { D, SD, Q };

struct KnownCharacter {
    std::string name;
    std::int64_t degree;
    // value at x^a y^b (w^a v^b for Q)
    std::function<CycInt(std::int64_t a, int b)> eval;
};

std::vector<KnownCharacter> known_table(SmallFamily family, int s);
// the closed-form rows evaluated at the class representatives of a D/SD/Q Sylow group
std::vector<Character> known_table_on(SmallFamily family, int s, const FiniteGroup& g, const ConjClassTable& cls);
bool tables_match_up_to_permutation(const std::vector<Character>& a, const std::vector<Character>& b);

std::vector<CycInt> restrict_character(const Character& chi, const ConjClassTable& gcls, const FiniteGroup& h,
                                       const ConjClassTable& hcls);

struct CliffordReport {
    bool normal = false;
    std::vector<std::size_t> constituents;
    std::vector<std::int64_t> multiplicities;
    bool single_orbit = false;
    bool equal_multiplicities = false;
    bool ok() const { return normal && single_orbit && equal_multiplicities; }
};

CliffordReport clifford_check(const FiniteGroup& g, const CharacterTable& gt, const std::vector<std::uint32_t>& n_elems,
                              std::size_t chi_index);

struct CentralTwoTorsion {
    std::vector<std::uint32_t> basis;
    std::vector<std::uint32_t> elements;
    int rank() const { return static_cast<int>(basis.size()); }
};

CentralTwoTorsion central_two_torsion(const FiniteGroup& g);
// bit k set iff basis[k] acts by -1
std::vector<std::uint8_t> central_character(const Character& chi, const ConjClassTable& cls,
                                            const CentralTwoTorsion& z);

bool quaternion_idempotent_check(int s);

}  // namespace ed2
