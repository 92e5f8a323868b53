#pragma once

#include "ed2/fieldctx.hpp"
#include "ed2/repchar.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ed2 {

struct FaithfulCertificate {
    std::vector<std::size_t> chosen;
    std::vector<std::int64_t> dims;
    std::int64_t total_dim = 0;
    int rank = 0;
    // row k = central-character functional of chosen[k] on the Z(G)[2] basis
    std::vector<std::vector<std::uint8_t>> basis_witness;
    bool witness_nonsingular = false;
    bool kernel_trivial = false;
    bool restriction_faithful = false;
    std::int64_t exhaustive_total = -1;

    std::string to_json() const;
};

FaithfulCertificate min_faithful_dim_split(const FiniteGroup& g, const CharacterTable& t);
FaithfulCertificate min_faithful_dim_split(const SylowGroup& g);

// exhaustive optimum over r-subsets of functional classes; -1 when the table is too large
std::int64_t min_faithful_exhaustive(const FiniteGroup& g, const CharacterTable& t, std::size_t max_chars = 64);

// kernel of the sum of the given characters, as class indices
std::vector<std::size_t> kernel_classes(const CharacterTable& t, const std::vector<std::size_t>& chosen);
bool restriction_to_center2_faithful(const CharacterTable& t, const CentralTwoTorsion& z,
                                     const std::vector<std::size_t>& chosen);

struct GammaOrbit {
    std::vector<std::vector<std::int64_t>> members;
    std::int64_t conductor = 1;
    std::int64_t k_dimension = 1;
};

// Gamma-orbits of characters a of (Z/2^s)^n and the dimension [k(zeta_f):k] of the matching k-irreducible
std::vector<GammaOrbit> gamma_orbit_dims(const std::vector<std::vector<std::int64_t>>& chars, const FieldContext& ctx);
std::int64_t induced_k_dimension(std::int64_t p_orbit_size, std::int64_t conductor, const FieldContext& ctx);

enum class Rationalization { FaithRep, FaithRep1, FaithRep2 };

std::string rationalization_name(Rationalization r);

struct RationalizationReport {
    Rationalization construction = Rationalization::FaithRep;
    int param = 0;
    int s = 0;
    std::uint64_t group_order = 0;
    std::vector<std::int64_t> character;
    std::size_t orbit_size = 0;
    std::int64_t k_dimension = 0;
    std::int64_t lemma_dimension = 0;
    std::uint32_t fixed_unit = 1;
    std::vector<std::vector<std::vector<CycRat>>> generator_matrices;
    bool entries_fixed = false;
    bool relations_ok = false;
    bool faithful = false;
    bool ok() const { return entries_fixed && relations_ok && faithful && k_dimension == lemma_dimension; }
};

// param is n = 2^t (faithrep) or m = 2^t (faithrep1/faithrep2)
RationalizationReport rationalize_induced(Rationalization which, int param, const FieldContext& ctx);

}  // namespace ed2
