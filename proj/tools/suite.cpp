#include "suite.hpp"

#include "ed2/error.hpp"
#include "ed2/minfaith.hpp"
#include "ed2/repchar.hpp"
#include "ed2/sylow.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>
#include <tuple>

namespace ed2::cli {

Suite parse_suite(const std::string& name)
{
    if (name == "ed")
        return Suite::Ed;
    if (name == "lemmas")
        return Suite::Lemmas;
    if (name == "tables")
        return Suite::Tables;
    if (name == "centers")
        return Suite::Centers;
    fail(ErrorKind::InvalidArgument, "unknown suite: " + name);
}

namespace {

using Cell = std::function<std::vector<VerificationReport>()>;

std::string gamma_elements(const UnitSubgroup& g)
{
    std::string out;
    for (std::size_t i = 0; i < g.elements.size(); ++i)
        out += (i ? " " : "") + std::to_string(g.elements[i]);
    return out;
}

bool wants(const SuiteOptions& opt, Family f)
{
    return opt.families.empty() || std::find(opt.families.begin(), opt.families.end(), f) != opt.families.end();
}

VerificationReport ed_cell(const GroupSpec& spec, std::uint64_t max_order)
{
    const int s = spec.natural_s();
    const FieldContext ctx = FieldContext::trivial(s);
    VerificationReport r;
    r.family = family_name(spec.family);
    r.n = spec.is_matrix_family() ? spec.n : (1 << spec.order_exponent);
    r.q = spec.q;
    r.nprime = spec.family == Family::SLQuotient ? spec.nprime : 0;
    r.s = s;
    r.gamma = gamma_elements(ctx.gamma);
    try {
        const EdResult e = evaluate(spec, ctx);
        r.case_tag = e.case_tag;
        r.formula = e.value;
        if (sylow_order_formula(spec) <= max_order) {
            const SylowGroup g = build_sylow(spec);
            r.oracle = min_faithful_dim_split(g).total_dim;
            r.match = *r.oracle == r.formula;
            r.deviation = !r.match && e.extrapolated;
            if (r.deviation)
                r.detail = e.assumptions.front();
        }
    } catch (const std::exception& ex) {
        r.case_tag = "exception";
        r.match = false;
        r.detail = ex.what();
    }
    return r;
}

std::vector<GroupSpec> ed_grid(const SuiteOptions& opt)
{
    std::vector<GroupSpec> out;
    for (auto q : opt.q_list)
        for (int n = 1; n <= opt.max_n; ++n) {
            if (wants(opt, Family::GL))
                out.push_back(GroupSpec::gl(n, q));
            // even n > 2 is covered only for q = 1 mod 4
            if (n >= 2 && (n == 2 || n % 2 == 1 || q % 4 == 1) && wants(opt, Family::SL))
                out.push_back(GroupSpec::sl(n, q));
            if (n >= 2 && wants(opt, Family::PGL))
                out.push_back(GroupSpec::pgl(n, q));
            if (n >= 2 && q % 4 == 1 && wants(opt, Family::SLQuotient))
                for (int np = 2; np <= n; ++np)
                    if (n % np == 0)
                        out.push_back(GroupSpec::sl_quotient(n, np, q));
        }
    for (int s = 2; s <= opt.max_s; ++s) {
        if (wants(opt, Family::Dihedral))
            out.push_back(GroupSpec::dihedral(s + 1));
        if (s >= 3 && wants(opt, Family::SemiDihedral))
            out.push_back(GroupSpec::semidihedral(s + 1));
        if (wants(opt, Family::Quaternion))
            out.push_back(GroupSpec::quaternion(s + 1));
    }
    return out;
}

VerificationReport table_cell(SmallFamily fam, Family f, int s)
{
    GroupSpec spec = f == Family::Dihedral ? GroupSpec::dihedral(s + 1)
                     : f == Family::SemiDihedral ? GroupSpec::semidihedral(s + 1)
                                                 : GroupSpec::quaternion(s + 1);
    const SylowGroup g = build_sylow(spec);
    const FiniteGroup fg = FiniteGroup::from_sylow(g);
    const CharacterTable t = character_table(fg);
    const auto known = known_table_on(fam, s, fg, t.classes);
    VerificationReport r;
    r.family = "table:" + family_name(f);
    r.n = 1 << (s + 1);
    r.s = s;
    r.case_tag = "known_table";
    r.formula = static_cast<std::int64_t>(known.size());
    r.oracle = static_cast<std::int64_t>(t.chars.size());
    r.match = tables_match_up_to_permutation(t.chars, known) && check_orthogonality(t);
    return r;
}

VerificationReport center_cell(const GroupSpec& spec, std::int64_t expected, const std::string& what)
{
    const SylowGroup g = build_sylow(spec);
    VerificationReport r;
    r.family = "center:" + family_name(spec.family);
    r.n = spec.n;
    r.q = spec.q;
    r.nprime = spec.family == Family::SLQuotient ? spec.nprime : 0;
    r.s = g.s();
    r.case_tag = what;
    r.formula = expected;
    r.oracle = what == "order" ? static_cast<std::int64_t>(center(g).size()) : center_2rank(g);
    r.match = *r.oracle == expected;
    return r;
}

std::vector<VerificationReport> lemma_cell(OrbitLemma lemma, int n, int s)
{
    LemmaParams p;
    p.n = n;
    p.s = s;
    const LemmaReport rep = verify_orbit_lemma(lemma, p);
    std::vector<VerificationReport> out;
    for (const auto& c : rep.cells) {
        if (!c.applicable)
            continue;
        VerificationReport r;
        r.family = "lemma:" + orbit_lemma_name(lemma);
        r.n = n;
        r.s = s;
        r.nprime = c.nprime;
        r.gamma = c.gamma;
        for (char& ch : r.gamma)
            if (ch == ',')
                ch = ' ';
        r.case_tag = c.method;
        if (c.j1)
            r.case_tag += ";j1=" + std::to_string(c.j1);
        if (c.j2)
            r.case_tag += ";j2=" + std::to_string(c.j2);
        r.formula = c.bound;
        r.oracle = c.min_achieved;
        r.match = c.violations.empty();
        if (!c.violations.empty())
            r.detail = c.violations.front();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<std::pair<int, int>> default_lemma_cells(OrbitLemma l)
{
    switch (l) {
    case OrbitLemma::IrrH1: {
        std::vector<std::pair<int, int>> v;
        for (int k = 1; k <= 3; ++k)
            for (int s = 2; s <= 4; ++s)
                v.emplace_back(1 << k, s);
        return v;
    }
    case OrbitLemma::IrrH2:
    case OrbitLemma::IrrH2Prime:
    case OrbitLemma::GammaAction:
        return {{4, 2}, {4, 3}};
    case OrbitLemma::Irr:
        return {{2, 3}, {3, 3}};
    case OrbitLemma::IrrHPSLn3:
        return {{4, 2}};
    case OrbitLemma::IrrHPSLn1:
        return {{6, 2}};
    }
    return {};
}

std::vector<Cell> build_cells(const SuiteOptions& opt)
{
    std::vector<Cell> cells;
    auto has = [&](Suite s) { return std::find(opt.suites.begin(), opt.suites.end(), s) != opt.suites.end(); };
    if (has(Suite::Ed))
        for (const auto& spec : ed_grid(opt))
            cells.push_back([spec, m = opt.max_order] { return std::vector<VerificationReport>{ed_cell(spec, m)}; });
    if (has(Suite::Tables))
        for (int s = 2; s <= opt.max_s; ++s) {
            if (wants(opt, Family::Dihedral))
                cells.push_back([s] { return std::vector<VerificationReport>{table_cell(SmallFamily::D, Family::Dihedral, s)}; });
            if (s >= 3 && wants(opt, Family::SemiDihedral))
                cells.push_back(
                    [s] { return std::vector<VerificationReport>{table_cell(SmallFamily::SD, Family::SemiDihedral, s)}; });
            if (wants(opt, Family::Quaternion))
                cells.push_back(
                    [s] { return std::vector<VerificationReport>{table_cell(SmallFamily::Q, Family::Quaternion, s)}; });
        }
    if (has(Suite::Centers)) {
        if (wants(opt, Family::SL))
            for (int n : {2, 4, 6})
                cells.push_back([n] {
                    return std::vector<VerificationReport>{
                        center_cell(GroupSpec::sl(n, 5), xi2(static_cast<std::uint64_t>(n)), "rank")};
                });
        if (wants(opt, Family::PGL))
            cells.push_back([] { return std::vector<VerificationReport>{center_cell(GroupSpec::pgl(4, 5), 2, "order")}; });
        if (wants(opt, Family::SLQuotient))
            cells.push_back([] {
                return std::vector<VerificationReport>{center_cell(GroupSpec::sl_quotient(6, 2, 5), xi2(6) - 1, "rank")};
            });
    }
    if (has(Suite::Lemmas)) {
        std::vector<OrbitLemma> lemmas = opt.lemmas;
        if (lemmas.empty())
            lemmas = {OrbitLemma::IrrH1, OrbitLemma::IrrH2,    OrbitLemma::IrrH2Prime, OrbitLemma::GammaAction,
                      OrbitLemma::Irr,   OrbitLemma::IrrHPSLn3, OrbitLemma::IrrHPSLn1};
        for (auto l : lemmas) {
            std::vector<std::pair<int, int>> params;
            if (opt.lemma_n || opt.lemma_s) {
                for (auto [n, s] : default_lemma_cells(l))
                    params.emplace_back(opt.lemma_n.value_or(n), opt.lemma_s.value_or(s));
                std::sort(params.begin(), params.end());
                params.erase(std::unique(params.begin(), params.end()), params.end());
            } else {
                params = default_lemma_cells(l);
            }
            for (auto [n, s] : params)
                cells.push_back([l, n = n, s = s] { return lemma_cell(l, n, s); });
        }
    }
    return cells;
}

}  // namespace

std::vector<VerificationReport> run_suite(const SuiteOptions& opt)
{
    const auto cells = build_cells(opt);
    std::vector<std::vector<VerificationReport>> results(cells.size());
    std::vector<std::string> errors(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            const auto t0 = std::chrono::steady_clock::now();
            try {
                results[i] = cells[i]();
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
            const auto ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
            if (opt.timing)
                for (auto& r : results[i])
                    r.ms = ms;
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(cells.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();

    std::vector<VerificationReport> out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!errors[i].empty()) {
            VerificationReport r;
            r.family = "error";
            r.case_tag = "exception";
            r.match = false;
            r.detail = errors[i];
            out.push_back(std::move(r));
        }
        for (auto& r : results[i])
            out.push_back(std::move(r));
    }
    std::stable_sort(out.begin(), out.end(), [](const VerificationReport& a, const VerificationReport& b) {
        return std::tie(a.family, a.n, a.q, a.nprime, a.s, a.gamma, a.case_tag, a.detail) <
               std::tie(b.family, b.n, b.q, b.nprime, b.s, b.gamma, b.case_tag, b.detail);
    });
    return out;
}

bool report_failed(const VerificationReport& r) { return !r.match && !r.deviation; }

std::string reports_csv(const std::vector<VerificationReport>& reports)
{
    std::ostringstream os;
    os << "family,n,q,nprime,s,gamma,case_tag,formula,oracle,match,ms\n";
    for (const auto& r : reports) {
        os << r.family << ',' << r.n << ',' << r.q << ',' << r.nprime << ',' << r.s << ',' << r.gamma << ','
           << r.case_tag << ',' << r.formula << ',';
        if (r.oracle)
            os << *r.oracle;
        os << ',';
        if (r.deviation)
            os << "deviation";
        else if (!r.match)
            os << "false";
        else
            os << (r.oracle ? "true" : "n/a");
        os << ',' << r.ms << '\n';
    }
    return os.str();
}

std::string reports_json(const std::vector<VerificationReport>& reports)
{
    nlohmann::ordered_json j;
    j["schema"] = 1;
    bool all = true;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json x;
        x["family"] = r.family;
        x["n"] = r.n;
        x["q"] = r.q;
        x["nprime"] = r.nprime;
        x["s"] = r.s;
        x["gamma"] = r.gamma;
        x["case_tag"] = r.case_tag;
        x["formula"] = r.formula;
        x["oracle"] = r.oracle ? nlohmann::ordered_json(*r.oracle) : nlohmann::ordered_json(nullptr);
        x["match"] = r.match;
        if (r.deviation)
            x["deviation"] = true;
        x["ms"] = r.ms;
        if (!r.detail.empty())
            x["detail"] = r.detail;
        all = all && !report_failed(r);
        rows.push_back(std::move(x));
    }
    j["all_pass"] = all;
    j["reports"] = rows;
    return j.dump(2) + "\n";
}

}  // namespace ed2::cli
