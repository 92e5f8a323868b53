#pragma once

#include "ed2/edformulas.hpp"
#include "ed2/orbits.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ed2::cli {

struct VerificationReport {
    std::string family;
    int n = 0;
    std::int64_t q = 0;
    int nprime = 0;
    int s = 0;
    std::string gamma;
    std::string case_tag;
    std::int64_t formula = 0;
    std::optional<std::int64_t> oracle;
    bool match = true;
    // formula extrapolated beyond its theorem's range and contradicted by the oracle
    bool deviation = false;
    std::int64_t ms = 0;
    std::string detail;
};

enum class Suite { Ed, Lemmas, Tables, Centers };

struct SuiteOptions {
    std::vector<Suite> suites;
    std::vector<Family> families;
    std::vector<std::int64_t> q_list{3, 5, 7, 13};
    int max_n = 4;
    int max_s = 5;
    std::uint64_t max_order = 2048;
    std::vector<OrbitLemma> lemmas;
    std::optional<int> lemma_n;
    std::optional<int> lemma_s;
    bool timing = false;
    unsigned jobs = 1;
};

Suite parse_suite(const std::string& name);

// runs every selected cell; reports are sorted canonically
std::vector<VerificationReport> run_suite(const SuiteOptions& opt);

bool report_failed(const VerificationReport& r);

std::string reports_csv(const std::vector<VerificationReport>& reports);
std::string reports_json(const std::vector<VerificationReport>& reports);

}  // namespace ed2::cli
