#include "suite.hpp"

#include "ed2/edformulas.hpp"
#include "ed2/error.hpp"
#include "ed2/orbits.hpp"
#include "ed2/repchar.hpp"
#include "ed2/sylow.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <sstream>
#include <thread>

using namespace ed2;

namespace {

struct GroupArgs {
    std::string family;
    int n = 0;
    std::int64_t q = 0;
    int nprime = 0;
    std::uint64_t order = 0;

    void add_to(CLI::App* app)
    {
        app->add_option("--family", family, "gl, sl, pgl, psl, d, sd or q")->required();
        app->add_option("--n", n, "matrix size");
        app->add_option("--q", q, "odd prime power");
        app->add_option("--nprime", nprime, "n' for psl (divides n)");
        app->add_option("--order", order, "group order for d, sd and q (a power of two)");
    }

    GroupSpec spec() const
    {
        const Family f = parse_family(family);
        GroupSpec g;
        switch (f) {
        case Family::Dihedral:
        case Family::SemiDihedral:
        case Family::Quaternion: {
            require(order >= 2 && is_pow2(order), ErrorKind::InvalidArgument, "--order must be a power of two");
            const int m = v2(order);
            g = f == Family::Dihedral ? GroupSpec::dihedral(m)
                : f == Family::SemiDihedral ? GroupSpec::semidihedral(m)
                                            : GroupSpec::quaternion(m);
            break;
        }
        case Family::SLQuotient:
            require(nprime > 0, ErrorKind::InvalidArgument, "--nprime is required for psl");
            g = GroupSpec::sl_quotient(n, nprime, q);
            break;
        default:
            g = GroupSpec{f, n, q, 1, 0};
        }
        require(!g.is_matrix_family() || (n > 0 && q > 0), ErrorKind::InvalidArgument, "--n and --q are required");
        g.validate();
        return g;
    }
};

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

int cmd_ed(const GroupArgs& ga, const std::string& field, bool json)
{
    const GroupSpec spec = ga.spec();
    const FieldContext ctx = FieldContext::parse(field, spec.natural_s());
    const EdResult r = evaluate(spec, ctx);
    if (json) {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["group"] = spec.to_string();
        j["field"] = ctx.to_string();
        j["value"] = r.value;
        j["case_tag"] = r.case_tag;
        j["assumptions"] = r.assumptions;
        j["extrapolated"] = r.extrapolated;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << r.value << "\t" << r.case_tag << "\n";
        for (const auto& a : r.assumptions)
            std::cout << "# " << a << "\n";
    }
    return 0;
}

int cmd_sylow(const GroupArgs& ga)
{
    const GroupSpec spec = ga.spec();
    const SylowGroup g = build_sylow(spec);
    const auto z = center(g);
    std::cout << "group: " << spec.to_string() << "\n";
    std::cout << "s: " << g.s() << "\n";
    std::cout << "order: " << g.order() << "\n";
    std::cout << "expected_order: " << g.expected_order() << "\n";
    std::cout << "center_order: " << z.size() << "\n";
    std::cout << "center_2rank: " << center_2rank(g) << "\n";
    if (!g.note().empty())
        std::cout << "note: " << g.note() << "\n";
    std::cout << "generators: " << g.generators().size() << "\n";
    for (std::size_t i = 0; i < g.generators().size(); ++i)
        std::cout << "  g" << i + 1 << ": " << g.generators()[i].to_string() << "\n";
    return 0;
}

int cmd_chartable(const GroupArgs& ga)
{
    const GroupSpec spec = ga.spec();
    const SylowGroup sg = build_sylow(spec);
    const FiniteGroup g = FiniteGroup::from_sylow(sg);
    const CharacterTable t = character_table(g);
    std::cout << "char,degree";
    for (auto rep : t.classes.reps)
        std::cout << "," << csv_quote(g.label(rep));
    std::cout << "\n";
    std::cout << "size,";
    for (auto sz : t.classes.sizes)
        std::cout << "," << sz;
    std::cout << "\n";
    for (std::size_t i = 0; i < t.chars.size(); ++i) {
        std::cout << "chi" << i + 1 << "," << t.chars[i].degree;
        for (const auto& v : t.chars[i].class_values)
            std::cout << "," << csv_quote(v.to_string());
        std::cout << "\n";
    }
    return 0;
}

int cmd_orbit(const std::string& lemma, int n, int s, const std::string& gamma, int nprime, int j1,
              const std::string& vector, const std::string& target)
{
    std::optional<UnitSubgroup> G;
    if (!gamma.empty()) {
        std::vector<std::int64_t> gens;
        for (const auto& x : split_list(gamma))
            gens.push_back(std::stoll(x));
        G = subgroup_from_generators(s, gens);
    }
    if (!vector.empty()) {
        OrbitActionSpec spec;
        std::vector<std::int64_t> a;
        for (const auto& x : split_list(vector))
            a.push_back(std::stoll(x));
        spec.n = static_cast<int>(a.size());
        spec.s = s;
        spec.nprime = nprime;
        spec.gamma = G;
        if (target == "plain")
            spec.target = OrbitTarget::PlainVector;
        else if (target == "diagonal")
            spec.target = OrbitTarget::DiagonalQuotient;
        else if (target == "gamma")
            spec.target = OrbitTarget::GammaQuotient;
        else if (target == "signtwisted")
            spec.target = OrbitTarget::SignTwisted;
        else
            fail(ErrorKind::InvalidArgument, "unknown target: " + target);
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["action"] = spec.to_string();
        j["vector"] = a;
        j["orbit_size"] = orbit_size(a, spec);
        std::cout << j.dump() << "\n";
        return 0;
    }
    require(!lemma.empty(), ErrorKind::InvalidArgument, "orbit: give --lemma or --vector");
    LemmaParams p;
    p.n = n;
    p.s = s;
    p.gamma = G;
    if (nprime)
        p.nprime = nprime;
    if (j1)
        p.j1 = j1;
    const LemmaReport rep = verify_orbit_lemma(parse_orbit_lemma(lemma), p);
    std::cout << rep.to_json() << "\n";
    return rep.ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"ed2: essential 2-dimension formulas and their verification"};
    app.require_subcommand(1);

    GroupArgs ed_args, sylow_args, table_args;
    std::string field = "trivial";
    bool ed_json = false;
    auto* ed = app.add_subcommand("ed", "evaluate the closed-form essential 2-dimension");
    ed_args.add_to(ed);
    ed->add_option("--field", field, "trivial or s=<int>;gamma=<g,...>;squares=<auto:kind|true|false>");
    ed->add_flag("--json", ed_json, "emit JSON");

    auto* sylow = app.add_subcommand("sylow", "build the Sylow 2-subgroup and print its structure");
    sylow_args.add_to(sylow);

    auto* chartable = app.add_subcommand("chartable", "character table of the Sylow 2-subgroup as CSV");
    table_args.add_to(chartable);

    std::string lemma, gamma, vector, target = "plain";
    int on = 0, os = 2, onprime = 0, oj1 = 0;
    auto* orbit = app.add_subcommand("orbit", "orbit sizes and exhaustive orbit-lemma scans");
    orbit->add_option("--lemma", lemma, "irrH1, irrH2, irrH2prime, gammaaction, irr, irrHPSLn3, irrHPSLn1");
    orbit->add_option("--n", on, "vector length (m for irr)");
    orbit->add_option("--s", os, "exponent s");
    orbit->add_option("--gamma", gamma, "generators of Gamma in (Z/2^s)^x");
    orbit->add_option("--nprime", onprime, "n' for the PSL lemmas");
    orbit->add_option("--j1", oj1, "block index for irrHPSLn1");
    orbit->add_option("--vector", vector, "comma separated vector; prints its orbit size");
    orbit->add_option("--target", target, "plain, diagonal, gamma or signtwisted")->capture_default_str();

    std::vector<std::string> suites;
    std::string families, q_list, lemmas, format = "csv";
    cli::SuiteOptions opt;
    opt.jobs = std::max(1u, std::thread::hardware_concurrency());
    int lemma_n = 0, lemma_s = 0;
    auto* verify = app.add_subcommand("verify", "formula-vs-oracle grid and invariant suites");
    verify->add_option("suites", suites, "ed, lemmas, tables, centers");
    verify->add_option("--families", families, "comma separated family filter");
    verify->add_option("--q-list", q_list, "comma separated q values");
    verify->add_option("--max-n", opt.max_n, "largest n")->capture_default_str();
    verify->add_option("--max-s", opt.max_s, "largest s for d, sd and q")->capture_default_str();
    verify->add_option("--max-order", opt.max_order, "largest Sylow order given to the oracle")->capture_default_str();
    verify->add_option("--lemmas", lemmas, "comma separated lemma filter");
    verify->add_option("--n", lemma_n, "n for the lemma scans");
    verify->add_option("--s", lemma_s, "s for the lemma scans");
    verify->add_option("--format", format, "csv or json")->capture_default_str();
    verify->add_flag("--timing", opt.timing, "fill the ms column");
    verify->add_option("--jobs", opt.jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*ed)
            return cmd_ed(ed_args, field, ed_json);
        if (*sylow)
            return cmd_sylow(sylow_args);
        if (*chartable)
            return cmd_chartable(table_args);
        if (*orbit)
            return cmd_orbit(lemma, on, os, gamma, onprime, oj1, vector, target);
        if (*verify) {
            for (const auto& f : split_list(families))
                opt.families.push_back(parse_family(f));
            if (!q_list.empty()) {
                opt.q_list.clear();
                for (const auto& q : split_list(q_list))
                    opt.q_list.push_back(std::stoll(q));
            }
            for (const auto& l : split_list(lemmas))
                opt.lemmas.push_back(parse_orbit_lemma(l));
            if (lemma_n)
                opt.lemma_n = lemma_n;
            if (lemma_s)
                opt.lemma_s = lemma_s;
            for (const auto& s : suites)
                opt.suites.push_back(cli::parse_suite(s));
            if (opt.suites.empty()) {
                if (!opt.lemmas.empty())
                    opt.suites = {cli::Suite::Lemmas};
                else if (!opt.families.empty())
                    opt.suites = {cli::Suite::Ed, cli::Suite::Tables, cli::Suite::Centers};
                else
                    opt.suites = {cli::Suite::Ed, cli::Suite::Lemmas, cli::Suite::Tables, cli::Suite::Centers};
            }
            require(format == "csv" || format == "json", ErrorKind::InvalidArgument, "--format must be csv or json");
            const auto reports = cli::run_suite(opt);
            std::cout << (format == "csv" ? cli::reports_csv(reports) : cli::reports_json(reports));
            bool ok = true;
            for (const auto& r : reports)
                if (!r.match) {
                    ok = ok && r.deviation;
                    std::cerr << (r.deviation ? "deviation: " : "mismatch: ") << r.family << " n=" << r.n << " q=" << r.q << " nprime=" << r.nprime
                              << " s=" << r.s << " " << r.case_tag << (r.detail.empty() ? "" : " " + r.detail) << "\n";
                }
            return ok ? 0 : 2;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
