#include "ed2/minfaith.hpp"

#include "ed2/error.hpp"
#include "ed2/numtheory.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ed2 {

std::string FaithfulCertificate::to_json() const
{
    nlohmann::json j;
    j["chosen"] = chosen;
    j["dims"] = dims;
    j["total_dim"] = total_dim;
    j["rank"] = rank;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : basis_witness) {
        std::vector<int> row(r.begin(), r.end());
        rows.push_back(row);
    }
    j["basis_matrix"] = rows;
    j["basis_nonsingular"] = witness_nonsingular;
    j["kernel_trivial"] = kernel_trivial;
    j["restriction_faithful"] = restriction_faithful;
    if (exhaustive_total >= 0)
        j["exhaustive_total"] = exhaustive_total;
    return j.dump();
}

namespace {

std::uint64_t mask_of(const std::vector<std::uint8_t>& bits)
{
    std::uint64_t m = 0;
    for (std::size_t k = 0; k < bits.size(); ++k)
        if (bits[k])
            m |= std::uint64_t{1} << k;
    return m;
}

// F_2 rank of a set of bit masks
int f2_rank(std::vector<std::uint64_t> v)
{
    int rank = 0;
    for (int bit = 63; bit >= 0; --bit) {
        auto it = std::find_if(v.begin(), v.end(), [bit](std::uint64_t x) { return (x >> bit) & 1; });
        if (it == v.end())
            continue;
        const std::uint64_t pivot = *it;
        v.erase(it);
        for (auto& x : v)
            if ((x >> bit) & 1)
                x ^= pivot;
        ++rank;
    }
    return rank;
}

struct FunctionalClass {
    std::uint64_t mask;
    std::size_t cheapest;
    std::int64_t dim;
};

std::vector<FunctionalClass> functional_classes(const CharacterTable& t, const CentralTwoTorsion& z)
{
    std::map<std::uint64_t, FunctionalClass> best;
    for (std::size_t i = 0; i < t.chars.size(); ++i) {
        const std::uint64_t m = mask_of(central_character(t.chars[i], t.classes, z));
        if (m == 0)
            continue;
        auto it = best.find(m);
        if (it == best.end() || t.chars[i].degree < it->second.dim)
            best[m] = {m, i, t.chars[i].degree};
    }
    std::vector<FunctionalClass> out;
    for (auto& [m, fc] : best)
        out.push_back(fc);
    std::stable_sort(out.begin(), out.end(), [](const FunctionalClass& a, const FunctionalClass& b) {
        if (a.dim != b.dim)
            return a.dim < b.dim;
        return a.cheapest < b.cheapest;
    });
    return out;
}

}  // namespace

std::vector<std::size_t> kernel_classes(const CharacterTable& t, const std::vector<std::size_t>& chosen)
{
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < t.classes.count(); ++c) {
        bool in = true;
        for (auto i : chosen) {
            const auto& ch = t.chars[i];
            if (!(ch.class_values[c] == CycInt(ch.class_values[c].modulus(), ch.degree))) {
                in = false;
                break;
            }
        }
        if (in)
            out.push_back(c);
    }
    return out;
}

bool restriction_to_center2_faithful(const CharacterTable& t, const CentralTwoTorsion& z,
                                     const std::vector<std::size_t>& chosen)
{
    for (auto e : z.elements) {
        if (e == 0)
            continue;
        const std::size_t c = t.classes.class_of[e];
        bool trivial = true;
        for (auto i : chosen) {
            const auto& ch = t.chars[i];
            if (!(ch.class_values[c] == CycInt(ch.class_values[c].modulus(), ch.degree))) {
                trivial = false;
                break;
            }
        }
        if (trivial)
            return false;
    }
    return true;
}

std::int64_t min_faithful_exhaustive(const FiniteGroup& g, const CharacterTable& t, std::size_t max_chars)
{
    if (t.chars.size() > max_chars)
        return -1;
    const CentralTwoTorsion z = central_two_torsion(g);
    const int r = z.rank();
    if (r == 0)
        return 0;
    const auto fcs = functional_classes(t, z);
    std::int64_t best = -1;
    std::vector<std::size_t> idx(r);
    // r-subsets of the functional classes
    std::function<void(std::size_t, int, std::int64_t)> rec = [&](std::size_t start, int depth, std::int64_t acc) {
        if (depth == r) {
            std::vector<std::uint64_t> masks;
            for (int k = 0; k < r; ++k)
                masks.push_back(fcs[idx[k]].mask);
            if (f2_rank(masks) == r && (best < 0 || acc < best))
                best = acc;
            return;
        }
        for (std::size_t i = start; i < fcs.size(); ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1, acc + fcs[i].dim);
        }
    };
    rec(0, 0, 0);
    return best;
}

FaithfulCertificate min_faithful_dim_split(const FiniteGroup& g, const CharacterTable& t)
{
    FaithfulCertificate cert;
    const CentralTwoTorsion z = central_two_torsion(g);
    cert.rank = z.rank();
    const auto fcs = functional_classes(t, z);
    std::vector<std::uint64_t> picked;
    for (const auto& fc : fcs) {
        if (static_cast<int>(picked.size()) == cert.rank)
            break;
        auto trial = picked;
        trial.push_back(fc.mask);
        if (f2_rank(trial) == static_cast<int>(trial.size())) {
            picked = std::move(trial);
            cert.chosen.push_back(fc.cheapest);
            cert.dims.push_back(fc.dim);
            cert.total_dim += fc.dim;
        }
    }
    require(static_cast<int>(cert.chosen.size()) == cert.rank, ErrorKind::InvalidArgument,
            "min_faithful_dim_split: central characters do not span the dual of Z(G)[2] (internal)");
    for (auto i : cert.chosen)
        cert.basis_witness.push_back(central_character(t.chars[i], t.classes, z));
    cert.witness_nonsingular = f2_rank(picked) == cert.rank;
    cert.kernel_trivial = kernel_classes(t, cert.chosen).size() == 1;
    cert.restriction_faithful = restriction_to_center2_faithful(t, z, cert.chosen);
    cert.exhaustive_total = min_faithful_exhaustive(g, t);
    return cert;
}

FaithfulCertificate min_faithful_dim_split(const SylowGroup& g)
{
    const FiniteGroup fg = FiniteGroup::from_sylow(g);
    const CharacterTable t = character_table(fg);
    return min_faithful_dim_split(fg, t);
}

std::vector<GammaOrbit> gamma_orbit_dims(const std::vector<std::vector<std::int64_t>>& chars, const FieldContext& ctx)
{
    const int s = ctx.s;
    const std::int64_t M = std::int64_t{1} << s;
    std::set<std::vector<std::int64_t>> seen;
    std::vector<GammaOrbit> out;
    for (const auto& a0 : chars) {
        std::vector<std::int64_t> a;
        for (auto x : a0)
            a.push_back(mod_pow2(x, s));
        if (seen.count(a))
            continue;
        GammaOrbit orb;
        std::set<std::vector<std::int64_t>> members;
        for (auto u : ctx.gamma.elements) {
            std::vector<std::int64_t> b;
            for (auto x : a)
                b.push_back((x * u) % M);
            members.insert(b);
        }
        std::int64_t g = M;
        for (auto x : a)
            g = std::gcd(g, x);
        orb.conductor = M / g;
        orb.k_dimension = induced_k_dimension(1, orb.conductor, ctx);
        orb.members.assign(members.begin(), members.end());
        require(static_cast<std::int64_t>(orb.members.size()) == orb.k_dimension, ErrorKind::InvalidArgument,
                "gamma_orbit_dims: orbit size differs from [k(zeta_f):k] (internal)");
        seen.insert(members.begin(), members.end());
        out.push_back(std::move(orb));
    }
    return out;
}

std::int64_t induced_k_dimension(std::int64_t p_orbit_size, std::int64_t conductor, const FieldContext& ctx)
{
    require(conductor >= 1 && is_pow2(static_cast<std::uint64_t>(conductor)), ErrorKind::InvalidArgument,
            "induced_k_dimension: conductor must be a power of two");
    if (conductor <= 2)
        return p_orbit_size;
    const int f = v2(static_cast<std::uint64_t>(conductor));
    return p_orbit_size * static_cast<std::int64_t>(reduce_subgroup(ctx.gamma, f).size());
}

std::string rationalization_name(Rationalization r)
{
    switch (r) {
    case Rationalization::FaithRep:
        return "faithrep";
    case Rationalization::FaithRep1:
        return "faithrep1";
    case Rationalization::FaithRep2:
        return "faithrep2";
    }
    return "?";
}

namespace {

using Vecb = std::vector<std::int64_t>;
using CMat = std::vector<std::vector<CycRat>>;

CMat mat_mul(const CMat& a, const CMat& b, std::uint32_t M)
{
    const std::size_t d = a.size();
    CMat r(d, std::vector<CycRat>(d, CycRat::from_int(M, 0)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            if (a[i][k].is_zero())
                continue;
            for (std::size_t j = 0; j < d; ++j)
                if (!b[k][j].is_zero())
                    r[i][j] = r[i][j] + a[i][k] * b[k][j];
        }
    return r;
}

bool mat_eq(const CMat& a, const CMat& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!(a[i][j] == b[i][j]))
                return false;
    return true;
}

}  // namespace

RationalizationReport rationalize_induced(Rationalization which, int param, const FieldContext& ctx)
{
    RationalizationReport rep;
    rep.construction = which;
    rep.param = param;
    const int s = ctx.s;
    rep.s = s;
    require(param >= 2 && is_pow2(static_cast<std::uint64_t>(param)), ErrorKind::Unsupported,
            "rationalize_induced: parameter must be a power of two >= 2");
    const int t = v2(static_cast<std::uint64_t>(param));
    const std::int64_t M = std::int64_t{1} << s;
    const auto Mu = static_cast<std::uint32_t>(M);
    const std::int64_t deg = degree_full(ctx);

    SylowLayout L;
    L.s = s;
    L.blocks = param;
    std::int64_t gamma_unit = 1;
    Vecb a(param, 0);
    if (which == Rationalization::FaithRep) {
        require(s >= 2, ErrorKind::InvalidArgument, "faithrep: s must be >= 2");
        require(contains_minus_one(ctx.gamma), ErrorKind::Hypothesis, "faithrep: hypothesis [-1] in Gamma violated");
        L.diag_step = 1;
        a[0] = 1;
        a[param / 2] = M - 1;
        gamma_unit = M - 1;
        rep.lemma_dimension = (std::int64_t{1} << (2 * t - 2)) * deg;
    } else {
        require(s >= 3, ErrorKind::InvalidArgument, "faithrep1/faithrep2: s must be >= 3");
        const bool twist = contains_half_twist(ctx.gamma);
        if (which == Rationalization::FaithRep2)
            require(twist, ErrorKind::Hypothesis, "faithrep2: hypothesis [2^{s-1}-1] in Gamma violated");
        else
            require(!twist, ErrorKind::Hypothesis, "faithrep1: hypothesis [2^{s-1}-1] not in Gamma violated");
        L.has_signs = true;
        L.twist = half_twist(s);
        L.diag_step = static_cast<std::uint32_t>(M / 2);
        a[0] = 1;
        a[param / 2] = 1;
        gamma_unit = which == Rationalization::FaithRep2 ? half_twist(s) : 1;
        rep.lemma_dimension = (std::int64_t{1} << (which == Rationalization::FaithRep2 ? 2 * t - 1 : 2 * t)) * deg;
    }
    rep.character = a;
    rep.fixed_unit = static_cast<std::uint32_t>(gamma_unit);

    const SylowGroup P = build_layout_group(L, rationalization_name(which));
    const auto& en = P.enumerate();
    rep.group_order = en.elements.size();

    auto dual = [&](const SylowElement& g, const Vecb& b) {
        Vecb r(b.size());
        for (std::size_t j = 0; j < b.size(); ++j)
            r[g.perm[j]] = b[j];
        if (!g.signs.empty())
            for (std::size_t i = 0; i < r.size(); ++i)
                if (g.signs[i])
                    r[i] = (r[i] * L.twist) % M;
        return r;
    };
    std::set<Vecb> orbit_set{a};
    std::vector<Vecb> queue{a};
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (const auto& g : P.generators()) {
            Vecb b = dual(g, queue[h]);
            if (orbit_set.insert(b).second)
                queue.push_back(b);
        }
    std::vector<Vecb> orbit(orbit_set.begin(), orbit_set.end());
    const std::size_t d = orbit.size();
    require(d <= 256, ErrorKind::BoundExceeded, "rationalize_induced: orbit larger than 256");
    rep.orbit_size = d;
    std::map<Vecb, std::size_t> pos;
    for (std::size_t k = 0; k < d; ++k)
        pos[orbit[k]] = k;

    struct Mono {
        std::vector<std::size_t> target;
        std::vector<std::int64_t> expo;
        bool operator==(const Mono&) const = default;
    };
    auto rho = [&](const SylowElement& g) {
        Mono m;
        for (const auto& b : orbit) {
            const Vecb b2 = dual(g, b);
            std::int64_t e = 0;
            for (std::size_t i = 0; i < b2.size(); ++i)
                e += b2[i] * g.torus[i];
            m.target.push_back(pos.at(b2));
            m.expo.push_back(mod_pow2(e, s));
        }
        return m;
    };
    auto compose = [&](const Mono& x, const Mono& y) {
        Mono r;
        for (std::size_t k = 0; k < d; ++k) {
            r.target.push_back(x.target[y.target[k]]);
            r.expo.push_back(mod_pow2(y.expo[k] + x.expo[y.target[k]], s));
        }
        return r;
    };
    std::vector<Mono> images;
    images.reserve(en.elements.size());
    for (const auto& g : en.elements)
        images.push_back(rho(g));
    bool hom = true;
    std::size_t kernel = 0;
    for (std::size_t i = 0; i < en.elements.size(); ++i) {
        bool ident = true;
        for (std::size_t k = 0; k < d; ++k)
            if (images[i].target[k] != k || images[i].expo[k] != 0)
                ident = false;
        kernel += ident ? 1 : 0;
        for (const auto& h : P.generators()) {
            const std::uint32_t j = en.find(P.multiply(en.elements[i], h));
            if (!(images[j] == compose(images[i], images[en.find(h)])))
                hom = false;
        }
    }
    rep.faithful = kernel == 1;

    // change of basis to the paired vectors
    const CycRat zero = CycRat::from_int(Mu, 0);
    CMat C(d, std::vector<CycRat>(d, zero));
    CMat Cinv = C;
    if (which == Rationalization::FaithRep1) {
        for (std::size_t k = 0; k < d; ++k)
            C[k][k] = Cinv[k][k] = CycRat::from_int(Mu, 1);
    } else {
        const CycRat eps(CycInt::root_power(Mu, 1));
        const CycRat epsinv(CycInt::root_power(Mu, -1));
        const CycRat c1 = which == Rationalization::FaithRep ? epsinv : -epsinv;
        const CycRat c2 = -eps;
        const CycRat one = CycRat::from_int(Mu, 1);
        const CycRat dinv = (c1 + c2).inverse();
        std::vector<char> done(d, 0);
        std::size_t col = 0;
        for (std::size_t k = 0; k < d; ++k) {
            if (done[k])
                continue;
            const Vecb& b = orbit[k];
            bool is_rep = false;
            for (int i = 0; i < param / 2; ++i)
                if (b[i] == 1)
                    is_rep = true;
            if (!is_rep)
                continue;
            Vecb gb;
            for (auto x : b)
                gb.push_back(mod_pow2(x * gamma_unit, s));
            auto it = pos.find(gb);
            require(it != pos.end() && it->second != k, ErrorKind::InvalidArgument,
                    "rationalize_induced: orbit is not closed under the pairing");
            const std::size_t kb = k, kg = it->second;
            done[kb] = done[kg] = 1;
            // columns col (v_b) and col+1 (v_{gamma b}) in u coordinates
            C[kb][col] = c1;
            C[kg][col] = c2;
            C[kb][col + 1] = -one;
            C[kg][col + 1] = one;
            Cinv[col][kb] = dinv;
            Cinv[col][kg] = dinv;
            Cinv[col + 1][kb] = -(c2 * dinv);
            Cinv[col + 1][kg] = c1 * dinv;
            col += 2;
        }
        require(col == d, ErrorKind::InvalidArgument, "rationalize_induced: pairing did not cover the orbit");
    }
    CMat I(d, std::vector<CycRat>(d, zero));
    for (std::size_t k = 0; k < d; ++k)
        I[k][k] = CycRat::from_int(Mu, 1);
    bool inv_ok = mat_eq(mat_mul(C, Cinv, Mu), I);

    bool fixed = true;
    bool conj_ok = true;
    for (const auto& g : P.generators()) {
        const Mono& m = images[en.find(g)];
        CMat U(d, std::vector<CycRat>(d, zero));
        for (std::size_t k = 0; k < d; ++k)
            U[m.target[k]][k] = CycRat(CycInt::root_power(Mu, m.expo[k]));
        CMat R = mat_mul(mat_mul(Cinv, U, Mu), C, Mu);
        if (!mat_eq(mat_mul(C, R, Mu), mat_mul(U, C, Mu)))
            conj_ok = false;
        for (const auto& row : R)
            for (const auto& x : row)
                if (!(x.galois(gamma_unit) == x))
                    fixed = false;
        rep.generator_matrices.push_back(std::move(R));
    }
    rep.entries_fixed = fixed;
    rep.relations_ok = hom && inv_ok && conj_ok;
    const std::int64_t subfield = which == Rationalization::FaithRep    ? degree_real_plus(ctx)
                                  : which == Rationalization::FaithRep2 ? degree_real_minus(ctx)
                                                                        : deg;
    rep.k_dimension = static_cast<std::int64_t>(d) * subfield;
    return rep;
}

}  // namespace ed2
