#pragma once

#include "ed2/edformulas.hpp"
#include "ed2/repchar.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ed2::oracle {

// frozen values

struct DegreeSnapshot {
    const char* group;
    std::uint64_t order;
    std::vector<std::pair<std::int64_t, int>> degrees;
};

// pinned after the first verified computation (orthogonality and sum of squares checked)
const std::vector<DegreeSnapshot>& degree_snapshots();

struct EdExample {
    GroupSpec spec;
    std::string field;
    std::int64_t value;
};

// closed-form values quoted with the theorems
const std::vector<EdExample>& ed_examples();

std::vector<GroupSpec> acceptance_grid();

// minimal faithful dimension of the Sylow of SL_4(F_5)/mu_2, from the oracle
inline constexpr std::int64_t kPsl42Oracle = 6;

// naive reference implementations

// 2-part of |GL_n(F_q)| from the product formula, factor by factor
std::uint64_t gl_two_part(int n, std::int64_t q);

// whether -1 is a sum of two squares in F_p, by exhausting pairs
bool minus_one_two_squares_mod(std::int64_t p);

// all of P_2(S_n) listed as explicit permutations
std::vector<std::vector<int>> p2_sn_elements(int n);

// orbit of a under the full group list, modulo Gamma scalars and optionally the full diagonal;
// sign_twist multiplies single entries by 2^{s-1}-1
std::size_t naive_orbit_size(const std::vector<std::int64_t>& a, int s, const std::vector<std::int64_t>& gamma,
                             bool diagonal, bool sign_twist);

// minimum total degree over subsets of irreducibles whose sum has trivial kernel
std::int64_t naive_min_faithful(const FiniteGroup& g, const CharacterTable& t);

}  // namespace ed2::oracle
