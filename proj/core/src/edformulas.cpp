#include "ed2/edformulas.hpp"

#include "ed2/error.hpp"

#include <algorithm>
#include <cctype>

namespace ed2 {

std::string family_name(Family f)
{
    switch (f) {
    case Family::GL:
        return "gl";
    case Family::SL:
        return "sl";
    case Family::PGL:
        return "pgl";
    case Family::SLQuotient:
        return "psl";
    case Family::Dihedral:
        return "d";
    case Family::SemiDihedral:
        return "sd";
    case Family::Quaternion:
        return "q";
    }
    return "?";
}

Family parse_family(const std::string& name)
{
    std::string v = name;
    for (auto& c : v)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (v == "gl")
        return Family::GL;
    if (v == "sl")
        return Family::SL;
    if (v == "pgl")
        return Family::PGL;
    if (v == "psl" || v == "slquotient")
        return Family::SLQuotient;
    if (v == "d" || v == "dihedral")
        return Family::Dihedral;
    if (v == "sd" || v == "semidihedral")
        return Family::SemiDihedral;
    if (v == "q" || v == "quaternion")
        return Family::Quaternion;
    fail(ErrorKind::InvalidArgument, "unknown family '" + name + "'");
}

bool GroupSpec::is_matrix_family() const
{
    return family == Family::GL || family == Family::SL || family == Family::PGL || family == Family::SLQuotient;
}

int GroupSpec::natural_s() const
{
    if (is_matrix_family())
        return compute_s(q);
    return order_exponent - 1;
}

void GroupSpec::validate() const
{
    if (is_matrix_family()) {
        require(n >= 1, ErrorKind::InvalidArgument, "group: n must be positive");
        compute_s(q);
        if (family == Family::SLQuotient)
            require(nprime >= 1 && n % nprime == 0, ErrorKind::InvalidArgument,
                    "group: nprime must divide n (n=" + std::to_string(n) + ", nprime=" + std::to_string(nprime) + ")");
        return;
    }
    const int minimum = family == Family::SemiDihedral ? 4 : 3;
    require(order_exponent >= minimum, ErrorKind::InvalidArgument,
            "group: " + family_name(family) + " needs order at least 2^" + std::to_string(minimum));
}

std::string GroupSpec::to_string() const
{
    if (is_matrix_family()) {
        std::string r = family_name(family) + "(n=" + std::to_string(n) + ",q=" + std::to_string(q);
        if (family == Family::SLQuotient)
            r += ",nprime=" + std::to_string(nprime);
        return r + ")";
    }
    return family_name(family) + "(order=2^" + std::to_string(order_exponent) + ")";
}

namespace {

void check_s(std::int64_t q, const FieldContext& ctx)
{
    const int s = compute_s(q);
    require(ctx.s == s, ErrorKind::InvalidArgument,
            "field context s=" + std::to_string(ctx.s) + " does not match s(q)=" + std::to_string(s) + " for q=" +
                std::to_string(q));
}

void note_small_s(EdResult& r, const FieldContext& ctx)
{
    if (ctx.s == 2)
        r.assumptions.push_back("s=2: membership predicates applied literally");
}

std::int64_t p2(int e) { return std::int64_t{1} << e; }

// quaternion-shaped branch shared by SL_2 (both q classes) and Q_{2^m}
EdResult quaternion_branch(const std::string& prefix, const FieldContext& c)
{
    EdResult r;
    const std::int64_t d = degree_full(c);
    if (!contains_minus_one(c.gamma)) {
        r.value = 2 * d;
        r.case_tag = prefix + ".minus1_absent";
    } else if (sum_two_squares_solvable(c)) {
        r.value = d;
        r.case_tag = prefix + ".minus1_present.squares";
    } else {
        r.value = 2 * d;
        r.case_tag = prefix + ".minus1_present.no_squares";
    }
    return r;
}

}  // namespace

EdResult ed_gl(int n, std::int64_t q, const FieldContext& ctx)
{
    require(n >= 1, ErrorKind::InvalidArgument, "ed_gl: n must be positive");
    check_s(q, ctx);
    EdResult r;
    if (q % 4 == 1) {
        r.value = ed_wreath(degree_full(ctx), n);
        r.case_tag = "gl.q1";
    } else if (n % 2 == 0) {
        r.value = std::int64_t{n} * degree_real_minus(ctx);
        r.case_tag = "gl.q3.even";
    } else {
        r.value = std::int64_t{n - 1} * degree_real_minus(ctx) + 1;
        r.case_tag = "gl.q3.odd";
    }
    note_small_s(r, ctx);
    return r;
}

EdResult ed_pgl(int n, std::int64_t q, const FieldContext& ctx)
{
    require(n >= 2, ErrorKind::InvalidArgument, "ed_pgl: n must be at least 2");
    check_s(q, ctx);
    EdResult r;
    const std::int64_t d = degree_full(ctx);
    if (n % 2 == 1) {
        r.value = ed_gl(n - 1, q, ctx).value;
        r.case_tag = q % 4 == 1 ? "pgl.q1.odd" : "pgl.q3.odd";
    } else if (q % 4 == 1) {
        if (!is_pow2(static_cast<std::uint64_t>(n))) {
            const int v = v2(static_cast<std::uint64_t>(n));
            r.value = p2(v) * (n - p2(v)) * d;
            r.case_tag = "pgl.q1.even";
        } else {
            const int t = v2(static_cast<std::uint64_t>(n));
            if (!contains_minus_one(ctx.gamma)) {
                r.value = p2(2 * t - 1) * d;
                r.case_tag = "pgl.q1.pow2.minus1_absent";
            } else {
                r.value = p2(2 * t - 2) * d;
                r.case_tag = "pgl.q1.pow2.minus1_present";
            }
        }
    } else if (n == 2) {
        const FieldContext c2 = ctx.restricted(ctx.s - 1);
        const std::int64_t d2 = degree_full(c2);
        if (!contains_minus_one(c2.gamma)) {
            r.value = 2 * d2;
            r.case_tag = "pgl.q3.n2.minus1_absent";
        } else {
            r.value = d2;
            r.case_tag = "pgl.q3.n2.minus1_present";
        }
    } else {
        const int m = n / 2;
        const bool twist = contains_half_twist(ctx.gamma);
        if (!is_pow2(static_cast<std::uint64_t>(m))) {
            const int v = v2(static_cast<std::uint64_t>(m));
            r.value = p2((twist ? 1 : 2) + v) * (m - p2(v)) * d;
            r.case_tag = twist ? "pgl.q3.m_general.twist_present" : "pgl.q3.m_general.twist_absent";
        } else {
            const int t = v2(static_cast<std::uint64_t>(m));
            r.value = p2(twist ? 2 * t - 1 : 2 * t) * d;
            r.case_tag = twist ? "pgl.q3.m_pow2.twist_present" : "pgl.q3.m_pow2.twist_absent";
        }
    }
    note_small_s(r, ctx);
    return r;
}

EdResult ed_sl_small(int n, std::int64_t q, const FieldContext& ctx)
{
    require(n >= 1, ErrorKind::InvalidArgument, "ed_sl_small: n must be positive");
    require(n == 2 || n % 2 == 1, ErrorKind::InvalidArgument,
            "ed_sl_small: n must be 2 or odd; use ed_sl_gamma_trivial for even n > 2");
    check_s(q, ctx);
    EdResult r;
    if (n % 2 == 1) {
        r.value = n == 1 ? 0 : ed_gl(n - 1, q, ctx).value;
        r.case_tag = q % 4 == 1 ? "sl.q1.odd" : "sl.q3.odd";
        if (q % 4 == 3)
            r.assumptions.push_back("odd branch read as ed(GL_{n-1}, 2)");
    } else if (q % 4 == 1) {
        r = quaternion_branch("sl.q1.n2", ctx);
    } else {
        r = quaternion_branch("sl.q3.n2", ctx.restricted(ctx.s - 1));
    }
    note_small_s(r, ctx);
    return r;
}

EdResult ed_sl_gamma_trivial(int n, std::int64_t q, const FieldContext& ctx)
{
    require(n >= 1, ErrorKind::InvalidArgument, "ed_sl_gamma_trivial: n must be positive");
    require(q % 4 == 1, ErrorKind::Hypothesis, "theorem hypothesis: q = 1 mod 4 required");
    require(ctx.gamma.is_trivial(), ErrorKind::Hypothesis, "theorem hypothesis: Gamma trivial required");
    check_s(q, ctx);
    EdResult r;
    if (n % 2 == 1) {
        r.value = n == 1 ? 0 : ed_gl(n - 1, q, ctx).value;
        r.case_tag = "sl.trivial.odd";
    } else {
        r.value = ed_gl(n, q, ctx).value;
        r.case_tag = "sl.trivial.even";
    }
    r.assumptions.push_back("Gamma trivial required");
    note_small_s(r, ctx);
    return r;
}

EdResult ed_sl(int n, std::int64_t q, const FieldContext& ctx)
{
    if (n == 2 || n % 2 == 1)
        return ed_sl_small(n, q, ctx);
    return ed_sl_gamma_trivial(n, q, ctx);
}

EdResult ed_sl_quotient(int n, int nprime, std::int64_t q, const FieldContext& ctx)
{
    require(n >= 1 && nprime >= 1 && n % nprime == 0, ErrorKind::InvalidArgument,
            "ed_sl_quotient: nprime must divide n");
    require(q % 4 == 1, ErrorKind::Hypothesis, "theorem hypothesis: q = 1 mod 4 required");
    require(ctx.gamma.is_trivial(), ErrorKind::Hypothesis, "theorem hypothesis: Gamma trivial required");
    check_s(q, ctx);
    EdResult r;
    if (nprime % 2 == 1) {
        r = ed_sl(n, q, ctx);
        r.case_tag = "psl.nprime_odd";
        r.assumptions.push_back("Gamma trivial required");
        return r;
    }
    const int v = std::min(v2(static_cast<std::uint64_t>(nprime)), ctx.s);
    if (n == 2) {
        r.value = 2;
        r.case_tag = "psl.n2";
    } else if (is_pow2(static_cast<std::uint64_t>(n))) {
        const int t = v2(static_cast<std::uint64_t>(n));
        r.value = v == 1 ? p2(2 * t - 2) : p2(2 * t - 1);
        r.case_tag = v == 1 ? "psl.pow2.v1" : "psl.pow2.v_gt1";
        if (t == 2) {
            r.extrapolated = true;
            r.assumptions.push_back("power-of-two branch extrapolated to t = 2 (theorem states t > 2)");
        }
    } else {
        const int vn = v2(static_cast<std::uint64_t>(n));
        r.value = p2(vn) * (n - p2(vn));
        r.case_tag = "psl.general";
    }
    r.assumptions.push_back("Gamma trivial required");
    note_small_s(r, ctx);
    return r;
}

namespace {

void check_order_ctx(int m, int minimum, const FieldContext& ctx, const std::string& what)
{
    require(m >= minimum, ErrorKind::InvalidArgument,
            what + ": order 2^" + std::to_string(m) + " too small (need m >= " + std::to_string(minimum) + ")");
    require(ctx.s == m - 1, ErrorKind::InvalidArgument,
            what + ": field context s=" + std::to_string(ctx.s) + " must equal m-1=" + std::to_string(m - 1));
}

}  // namespace

EdResult ed_sd(int m, const FieldContext& ctx)
{
    check_order_ctx(m, 4, ctx, "ed_sd");
    EdResult r;
    r.value = 2 * degree_real_minus(ctx);
    r.case_tag = contains_half_twist(ctx.gamma) ? "sd.twist_present" : "sd.twist_absent";
    return r;
}

EdResult ed_d(int m, const FieldContext& ctx)
{
    check_order_ctx(m, 3, ctx, "ed_d");
    EdResult r;
    r.value = 2 * degree_real_plus(ctx);
    r.case_tag = contains_minus_one(ctx.gamma) ? "d.minus1_present" : "d.minus1_absent";
    note_small_s(r, ctx);
    return r;
}

EdResult ed_q(int m, const FieldContext& ctx)
{
    check_order_ctx(m, 3, ctx, "ed_q");
    EdResult r = quaternion_branch("q", ctx);
    note_small_s(r, ctx);
    return r;
}

std::int64_t ed_wreath(std::int64_t base_ed, std::int64_t N)
{
    require(base_ed >= 0 && N >= 0, ErrorKind::InvalidArgument, "ed_wreath: arguments must be nonnegative");
    return N * base_ed;
}

EdResult evaluate(const GroupSpec& spec, const FieldContext& ctx)
{
    spec.validate();
    switch (spec.family) {
    case Family::GL:
        return ed_gl(spec.n, spec.q, ctx);
    case Family::SL:
        return ed_sl(spec.n, spec.q, ctx);
    case Family::PGL:
        return ed_pgl(spec.n, spec.q, ctx);
    case Family::SLQuotient:
        return ed_sl_quotient(spec.n, spec.nprime, spec.q, ctx);
    case Family::Dihedral:
        return ed_d(spec.order_exponent, ctx);
    case Family::SemiDihedral:
        return ed_sd(spec.order_exponent, ctx);
    case Family::Quaternion:
        return ed_q(spec.order_exponent, ctx);
    }
    fail(ErrorKind::InvalidArgument, "evaluate: unknown family");
}

}  // namespace ed2
