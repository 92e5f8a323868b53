#pragma once

#include "ed2/fieldctx.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ed2 {

enum class Family { GL, SL, PGL, SLQuotient, Dihedral, SemiDihedral, Quaternion };

std::string family_name(Family f);
Family parse_family(const std::string& name);

struct GroupSpec {
    Family family = Family::GL;
    int n = 1;
    std::int64_t q = 5;
    int nprime = 1;
    int order_exponent = 0;

    static GroupSpec gl(int n, std::int64_t q) { return {Family::GL, n, q, 1, 0}; }
    static GroupSpec sl(int n, std::int64_t q) { return {Family::SL, n, q, 1, 0}; }
    static GroupSpec pgl(int n, std::int64_t q) { return {Family::PGL, n, q, 1, 0}; }
    static GroupSpec sl_quotient(int n, int nprime, std::int64_t q) { return {Family::SLQuotient, n, q, nprime, 0}; }
    static GroupSpec dihedral(int m) { return {Family::Dihedral, 0, 0, 1, m}; }
    static GroupSpec semidihedral(int m) { return {Family::SemiDihedral, 0, 0, 1, m}; }
    static GroupSpec quaternion(int m) { return {Family::Quaternion, 0, 0, 1, m}; }

    bool is_matrix_family() const;
    // the exponent s of epsilon attached to this group
    int natural_s() const;
    std::string to_string() const;
    void validate() const;
    bool operator==(const GroupSpec&) const = default;
};

struct EdResult {
    std::int64_t value = 0;
    std::string case_tag;
    std::vector<std::string> assumptions;
    // the closed form was applied outside the parameter range its theorem states
    bool extrapolated = false;
};

EdResult ed_gl(int n, std::int64_t q, const FieldContext& ctx);
EdResult ed_pgl(int n, std::int64_t q, const FieldContext& ctx);
EdResult ed_sl_small(int n, std::int64_t q, const FieldContext& ctx);
EdResult ed_sl_gamma_trivial(int n, std::int64_t q, const FieldContext& ctx);
EdResult ed_sl(int n, std::int64_t q, const FieldContext& ctx);
EdResult ed_sl_quotient(int n, int nprime, std::int64_t q, const FieldContext& ctx);
EdResult ed_sd(int m, const FieldContext& ctx);
EdResult ed_d(int m, const FieldContext& ctx);
EdResult ed_q(int m, const FieldContext& ctx);
std::int64_t ed_wreath(std::int64_t base_ed, std::int64_t N);

EdResult evaluate(const GroupSpec& spec, const FieldContext& ctx);

}  // namespace ed2
