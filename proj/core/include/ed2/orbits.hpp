#pragma once

#include "ed2/numtheory.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ed2 {

enum class OrbitTarget { PlainVector, DiagonalQuotient, GammaQuotient, SignTwisted };

std::string orbit_target_name(OrbitTarget t);

// Action of P_2(S_n) (with sign twists for SignTwisted) on (Z/2^s)^n.
// gamma is applied as a scalar quotient for every target except PlainVector.
struct OrbitActionSpec {
    int n = 1;
    int s = 2;
    OrbitTarget target = OrbitTarget::PlainVector;
    int nprime = 0;
    std::optional<UnitSubgroup> gamma;

    std::string to_string() const;
};

std::vector<std::int64_t> orbit_canonical(const std::vector<std::int64_t>& a, const OrbitActionSpec& spec);
std::uint64_t orbit_size(const std::vector<std::int64_t>& a, const OrbitActionSpec& spec);

// size of the P_2(S_n)-orbit of the row Psi_a in the Dixon character table of (mu_{2^s})^n
std::uint64_t representation_orbit_size(const std::vector<std::int64_t>& a, int s);

enum class OrbitLemma { IrrH1, IrrH2, IrrH2Prime, GammaAction, Irr, IrrHPSLn3, IrrHPSLn1 };

std::string orbit_lemma_name(OrbitLemma l);
OrbitLemma parse_orbit_lemma(const std::string& name);

struct LemmaParams {
    int n = 0;
    int s = 2;
    // restricts the scan to one Gamma; otherwise every subgroup of (Z/2^s)^x is scanned where relevant
    std::optional<UnitSubgroup> gamma;
    // restricts the scan to one n'; otherwise every even divisor of n
    std::optional<int> nprime;
    // restricts irrHPSLn1 to one block index (1-based)
    std::optional<int> j1;
};

struct LemmaCell {
    std::string gamma;
    int nprime = 0;
    int j1 = 0;
    int j2 = 0;
    bool applicable = true;
    std::string method;
    std::int64_t min_achieved = -1;
    std::int64_t bound = 0;
    std::uint64_t count_scanned = 0;
    std::vector<std::string> violations;
};

struct LemmaReport {
    OrbitLemma lemma = OrbitLemma::IrrH1;
    int n = 0;
    int s = 2;
    std::vector<LemmaCell> cells;
    std::int64_t min_achieved = -1;
    std::int64_t bound = 0;
    std::uint64_t count_scanned = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
    std::string to_json() const;
};

LemmaReport verify_orbit_lemma(OrbitLemma lemma, const LemmaParams& params);

// irrH1 scan via equality partitions (exact for the plain target); exposed for cross-checking
LemmaCell irrh1_partition_scan(int n, int s);
LemmaCell irrh1_exhaustive_scan(int n, int s);

}  // namespace ed2
