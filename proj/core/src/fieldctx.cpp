#include "ed2/fieldctx.hpp"

#include "ed2/cycint.hpp"
#include "ed2/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace ed2 {

namespace {

std::string trim(std::string x)
{
    auto notsp = [](unsigned char c) { return !std::isspace(c); };
    x.erase(x.begin(), std::find_if(x.begin(), x.end(), notsp));
    x.erase(std::find_if(x.rbegin(), x.rend(), notsp).base(), x.end());
    return x;
}

std::string lower(std::string x)
{
    for (auto& c : x)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return x;
}

std::int64_t parse_int(const std::string& x, const std::string& what)
{
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(x, &pos);
        if (pos != x.size())
            throw std::invalid_argument(x);
        return v;
    } catch (const std::exception&) {
        fail(ErrorKind::InvalidArgument, "field: cannot parse " + what + " '" + x + "'");
    }
}

SquaresMode parse_squares(const std::string& raw)
{
    const std::string v = lower(trim(raw));
    if (v == "true")
        return SquaresMode::forced(true);
    if (v == "false")
        return SquaresMode::forced(false);
    static const std::map<std::string, SquaresKind> kinds = {
        {"finitefield", SquaresKind::FiniteFieldOddChar},
        {"finitefieldoddchar", SquaresKind::FiniteFieldOddChar},
        {"rational", SquaresKind::Rational},
        {"realcyclo", SquaresKind::RealCyclotomicSubfield},
        {"realcyclotomicsubfield", SquaresKind::RealCyclotomicSubfield},
        {"containsi", SquaresKind::ContainsI},
    };
    if (v.rfind("auto:", 0) == 0) {
        auto it = kinds.find(v.substr(5));
        if (it != kinds.end())
            return SquaresMode::automatic(it->second);
    }
    fail(ErrorKind::InvalidArgument, "field: unknown squares mode '" + raw + "'");
}

}  // namespace

std::string SquaresMode::to_string() const
{
    switch (mode) {
    case Mode::ForcedTrue:
        return "true";
    case Mode::ForcedFalse:
        return "false";
    case Mode::Auto:
        break;
    }
    switch (kind) {
    case SquaresKind::FiniteFieldOddChar:
        return "auto:finitefield";
    case SquaresKind::Rational:
        return "auto:rational";
    case SquaresKind::RealCyclotomicSubfield:
        return "auto:realcyclo";
    case SquaresKind::ContainsI:
        return "auto:containsi";
    }
    return "?";
}

FieldContext FieldContext::trivial(int s, SquaresMode sq)
{
    require(s >= 2, ErrorKind::InvalidArgument, "field: s must be >= 2");
    return FieldContext{s, trivial_subgroup(s), sq};
}

FieldContext FieldContext::make(int s, const std::vector<std::int64_t>& gamma_gens, SquaresMode sq)
{
    require(s >= 2 && s <= 30, ErrorKind::InvalidArgument, "field: s must lie in [2,30]");
    return FieldContext{s, subgroup_from_generators(s, gamma_gens), sq};
}

FieldContext FieldContext::parse(const std::string& text, std::optional<int> default_s)
{
    const std::string t = trim(text);
    if (lower(t) == "trivial") {
        require(default_s.has_value(), ErrorKind::InvalidArgument, "field: 'trivial' needs s from the group parameters");
        return trivial(*default_s);
    }
    std::optional<int> s;
    std::vector<std::int64_t> gens;
    std::optional<SquaresMode> sq;
    std::stringstream ss(t);
    std::string part;
    while (std::getline(ss, part, ';')) {
        part = trim(part);
        if (part.empty())
            continue;
        const auto eq = part.find('=');
        require(eq != std::string::npos, ErrorKind::InvalidArgument, "field: expected key=value, got '" + part + "'");
        const std::string key = lower(trim(part.substr(0, eq)));
        const std::string val = trim(part.substr(eq + 1));
        if (key == "s") {
            s = static_cast<int>(parse_int(val, "s"));
        } else if (key == "gamma") {
            std::stringstream gs(val);
            std::string g;
            while (std::getline(gs, g, ','))
                if (!trim(g).empty())
                    gens.push_back(parse_int(trim(g), "gamma generator"));
        } else if (key == "squares") {
            sq = parse_squares(val);
        } else {
            fail(ErrorKind::InvalidArgument, "field: unknown key '" + key + "'");
        }
    }
    if (!s)
        s = default_s;
    require(s.has_value(), ErrorKind::InvalidArgument, "field: missing s");
    if (!sq) {
        FieldContext probe = make(*s, gens, SquaresMode::forced(false));
        const bool has_i = std::all_of(probe.gamma.elements.begin(), probe.gamma.elements.end(),
                                       [](std::uint32_t u) { return u % 4 == 1; });
        if (has_i)
            probe.squares = SquaresMode::automatic(SquaresKind::ContainsI);
        return probe;
    }
    return make(*s, gens, *sq);
}

std::string FieldContext::to_string() const
{
    return "s=" + std::to_string(s) + ";gamma=" + gamma.generators_string() + ";squares=" + squares.to_string();
}

FieldContext FieldContext::restricted(int s2) const { return FieldContext{s2, reduce_subgroup(gamma, s2), squares}; }

int degree_full(const FieldContext& ctx) { return static_cast<int>(ctx.gamma.size()); }

int degree_real_plus(const FieldContext& ctx)
{
    const int d = degree_full(ctx);
    return contains_minus_one(ctx.gamma) ? d / 2 : d;
}

int degree_real_minus(const FieldContext& ctx)
{
    const int d = degree_full(ctx);
    return contains_half_twist(ctx.gamma) ? d / 2 : d;
}

bool char_field_check(const FieldContext& ctx, std::int64_t i)
{
    require(i % 2 != 0, ErrorKind::InvalidArgument, "char_field_check: i must be odd");
    const std::uint32_t m = ctx.gamma.modulus();
    auto fixes = [&](std::uint32_t u, std::int64_t mult) {
        for (std::int64_t a = 0; a < static_cast<std::int64_t>(m); ++a) {
            const CycInt v = CycInt::root_power(m, a * mult) + CycInt::root_power(m, -a * mult);
            if (!(v.galois(u) == v))
                return false;
        }
        return true;
    };
    for (auto u : ctx.gamma.elements)
        if (fixes(u, i) != fixes(u, 1))
            return false;
    return true;
}

bool sum_two_squares_solvable(const FieldContext& ctx, SquaresOver)
{
    switch (ctx.squares.mode) {
    case SquaresMode::Mode::ForcedTrue:
        return true;
    case SquaresMode::Mode::ForcedFalse:
        return false;
    case SquaresMode::Mode::Auto:
        break;
    }
    switch (ctx.squares.kind) {
    case SquaresKind::FiniteFieldOddChar:
    case SquaresKind::ContainsI:
        return true;
    case SquaresKind::Rational:
    case SquaresKind::RealCyclotomicSubfield:
        return false;
    }
    return false;
}

}  // namespace ed2
