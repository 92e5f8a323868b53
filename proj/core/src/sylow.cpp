#include "ed2/sylow.hpp"

#include "ed2/error.hpp"
#include "ed2/numtheory.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <set>
#include <sstream>

namespace ed2 {

std::string SylowElement::key() const
{
    std::string k;
    k.reserve(torus.size() * 2 + signs.size() + perm.size() + 2);
    for (auto t : torus) {
        k.push_back(static_cast<char>(t & 0xff));
        k.push_back(static_cast<char>((t >> 8) & 0xff));
    }
    k.push_back('|');
    for (auto c : signs)
        k.push_back(static_cast<char>(c));
    for (auto p : perm)
        k.push_back(static_cast<char>(p));
    k.push_back(static_cast<char>(extra));
    return k;
}

std::string SylowElement::to_string() const
{
    std::ostringstream os;
    os << "t=(";
    for (std::size_t i = 0; i < torus.size(); ++i)
        os << (i ? "," : "") << torus[i];
    os << ")";
    if (!signs.empty()) {
        os << " y=(";
        for (std::size_t i = 0; i < signs.size(); ++i)
            os << (i ? "," : "") << int(signs[i]);
        os << ")";
    }
    os << " p=[";
    for (std::size_t i = 0; i < perm.size(); ++i)
        os << (i ? "," : "") << int(perm[i]) + 1;
    os << "]";
    if (extra)
        os << " e=1";
    return os.str();
}

std::vector<Perm> p2_sn_generators(int N)
{
    require(N >= 0, ErrorKind::InvalidArgument, "p2_sn_generators: N must be nonnegative");
    std::vector<Perm> out;
    if (N < 2)
        return out;
    for (int j = 1; j <= mu2(static_cast<std::uint64_t>(N)); ++j) {
        const int len = 1 << j;
        for (int i = 1; i <= N / len; ++i) {
            Perm p(N);
            for (int k = 0; k < N; ++k)
                p[k] = static_cast<std::uint8_t>(k);
            const int base = (i - 1) * len;
            for (int k = 0; k < len / 2; ++k)
                std::swap(p[base + k], p[base + len / 2 + k]);
            out.push_back(std::move(p));
        }
    }
    return out;
}

std::vector<std::vector<int>> block_orbits(int N)
{
    std::vector<std::vector<int>> out;
    int pos = 0;
    for (int b = 62; b >= 0; --b) {
        if (!((static_cast<std::uint64_t>(N) >> b) & 1))
            continue;
        std::vector<int> blk;
        for (int k = 0; k < (1 << b); ++k)
            blk.push_back(pos + k);
        pos += 1 << b;
        out.push_back(std::move(blk));
    }
    return out;
}

int perm_sign(const Perm& p)
{
    std::vector<bool> seen(p.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i])
            continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0)
            sign = -sign;
    }
    return sign;
}

Perm perm_compose(const Perm& a, const Perm& b)
{
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[b[i]];
    return r;
}

std::uint64_t perm_closure_order(const std::vector<Perm>& gens, int N)
{
    Perm id(N);
    for (int k = 0; k < N; ++k)
        id[k] = static_cast<std::uint8_t>(k);
    std::set<Perm> seen{id};
    std::vector<Perm> frontier{id};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& p : frontier)
            for (const auto& g : gens) {
                Perm c = perm_compose(p, g);
                if (seen.insert(c).second)
                    next.push_back(std::move(c));
            }
        frontier.swap(next);
    }
    return seen.size();
}

std::uint64_t max_group_order()
{
    if (const char* env = std::getenv("ED2_MAX_GROUP_ORDER")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return std::uint64_t{1} << 16;
}

struct SylowGroup::Memo {
    std::once_flag once;
    std::unique_ptr<Enumeration> enumeration;
};

std::uint32_t SylowGroup::Enumeration::find(const SylowElement& e) const
{
    auto it = index.find(e.key());
    require(it != index.end(), ErrorKind::InvalidArgument, "element not in group: " + e.to_string());
    return it->second;
}

SylowGroup::SylowGroup(GroupSpec spec, int s, SylowLayout layout, Constraint constraint, std::vector<SylowElement> gens,
                       std::uint64_t expected_order, std::string note)
    : spec_(spec), s_(s), layout_(layout), constraint_(constraint), gens_(), expected_(expected_order),
      note_(std::move(note)), memo_(std::make_shared<Memo>())
{
    for (auto& g : gens)
        gens_.push_back(canonical(std::move(g)));
}

SylowElement SylowGroup::identity() const
{
    SylowElement e;
    e.torus.assign(layout_.blocks, 0);
    if (layout_.has_signs)
        e.signs.assign(layout_.blocks, 0);
    e.perm.resize(layout_.blocks);
    for (int k = 0; k < layout_.blocks; ++k)
        e.perm[k] = static_cast<std::uint8_t>(k);
    return e;
}

SylowElement SylowGroup::canonical(SylowElement a) const
{
    const std::int64_t m = std::int64_t{1} << layout_.s;
    for (auto& t : a.torus)
        t = static_cast<std::int32_t>(((t % m) + m) % m);
    if (layout_.diag_step != 0 && !a.torus.empty()) {
        const std::int32_t d = a.torus[0] - static_cast<std::int32_t>(a.torus[0] % layout_.diag_step);
        for (auto& t : a.torus)
            t = static_cast<std::int32_t>((((t - d) % m) + m) % m);
    }
    return a;
}

SylowElement SylowGroup::multiply(const SylowElement& a, const SylowElement& b) const
{
    const int N = layout_.blocks;
    const std::int64_t m = std::int64_t{1} << layout_.s;
    SylowElement r;
    r.torus.resize(N);
    if (layout_.has_signs)
        r.signs.resize(N);
    r.perm.resize(N);
    for (int j = 0; j < N; ++j) {
        // coordinate j of b lands at a.perm[j]
        const int i = a.perm[j];
        std::int64_t y = b.torus[j];
        if (layout_.has_signs) {
            const bool ci = a.signs[i] != 0;
            const bool dj = b.signs[j] != 0;
            if (ci)
                y = y * layout_.twist;
            std::int64_t v = a.torus[i] + y + ((ci && dj) ? layout_.cocycle : 0);
            r.torus[i] = static_cast<std::int32_t>(v % m);
            r.signs[i] = static_cast<std::uint8_t>(ci != dj);
        } else {
            r.torus[i] = static_cast<std::int32_t>((a.torus[i] + y) % m);
        }
    }
    for (int k = 0; k < N; ++k)
        r.perm[k] = a.perm[b.perm[k]];
    r.extra = static_cast<std::uint8_t>(a.extra ^ b.extra);
    return canonical(std::move(r));
}

SylowElement SylowGroup::power(const SylowElement& a, std::uint64_t k) const
{
    SylowElement r = identity();
    SylowElement base = a;
    while (k) {
        if (k & 1)
            r = multiply(r, base);
        base = multiply(base, base);
        k >>= 1;
    }
    return r;
}

int SylowGroup::element_order(const SylowElement& a) const
{
    const SylowElement e = identity();
    SylowElement cur = a;
    int o = 1;
    while (!(cur == e)) {
        cur = multiply(cur, a);
        ++o;
        require(o <= (1 << 20), ErrorKind::InvalidArgument, "element_order: runaway (internal)");
    }
    return o;
}

SylowElement SylowGroup::inverse(const SylowElement& a) const
{
    const int o = element_order(a);
    return power(a, static_cast<std::uint64_t>(o - 1));
}

int SylowGroup::det_q3(const SylowElement& a) const
{
    int par = a.extra;
    for (std::size_t i = 0; i < a.torus.size(); ++i)
        par += a.torus[i] + (a.signs.empty() ? 0 : a.signs[i]);
    return (par % 2 == 0) ? 1 : -1;
}

bool SylowGroup::satisfies_constraint(const SylowElement& a) const
{
    switch (constraint_) {
    case Constraint::None:
        return true;
    case Constraint::SLq1: {
        const std::int64_t m = std::int64_t{1} << layout_.s;
        std::int64_t sum = 0;
        for (auto t : a.torus)
            sum += t;
        const std::int64_t target = perm_sign(a.perm) < 0 ? m / 2 : 0;
        return ((sum - target) % m + m) % m == 0;
    }
    case Constraint::SLq3:
        return det_q3(a) == 1;
    }
    return false;
}

SylowElement SylowGroup::make_torus(const std::vector<std::int64_t>& t) const
{
    SylowElement e = identity();
    for (std::size_t i = 0; i < t.size() && i < e.torus.size(); ++i)
        e.torus[i] = static_cast<std::int32_t>(t[i]);
    return canonical(std::move(e));
}

const SylowGroup::Enumeration& SylowGroup::enumerate() const
{
    std::call_once(memo_->once, [this] {
        const std::uint64_t cap = max_group_order();
        require(expected_ <= cap, ErrorKind::BoundExceeded,
                "group order " + std::to_string(expected_) + " exceeds enumeration cap " + std::to_string(cap) +
                    " (set ED2_MAX_GROUP_ORDER to raise it)");
        auto en = std::make_unique<Enumeration>();
        const SylowElement e = identity();
        en->index.emplace(e.key(), 0);
        en->elements.push_back(e);
        for (std::size_t head = 0; head < en->elements.size(); ++head) {
            for (const auto& g : gens_) {
                SylowElement c = multiply(en->elements[head], g);
                std::string k = c.key();
                if (en->index.find(k) != en->index.end())
                    continue;
                require(en->elements.size() < cap, ErrorKind::BoundExceeded, "group enumeration exceeded the cap");
                en->index.emplace(std::move(k), static_cast<std::uint32_t>(en->elements.size()));
                en->elements.push_back(std::move(c));
            }
        }
        memo_->enumeration = std::move(en);
    });
    return *memo_->enumeration;
}

namespace {

SylowElement blank(const SylowLayout& L)
{
    SylowElement e;
    e.torus.assign(L.blocks, 0);
    if (L.has_signs)
        e.signs.assign(L.blocks, 0);
    e.perm.resize(L.blocks);
    for (int k = 0; k < L.blocks; ++k)
        e.perm[k] = static_cast<std::uint8_t>(k);
    return e;
}

std::vector<SylowElement> wreath_generators(const SylowLayout& L)
{
    std::vector<SylowElement> gens;
    for (int i = 0; i < L.blocks; ++i) {
        SylowElement x = blank(L);
        x.torus[i] = 1;
        gens.push_back(std::move(x));
        if (L.has_signs) {
            SylowElement y = blank(L);
            y.signs[i] = 1;
            gens.push_back(std::move(y));
        }
    }
    for (auto& p : p2_sn_generators(L.blocks)) {
        SylowElement g = blank(L);
        g.perm = p;
        gens.push_back(std::move(g));
    }
    if (L.has_extra) {
        SylowElement g = blank(L);
        g.extra = 1;
        gens.push_back(std::move(g));
    }
    return gens;
}

SylowLayout gl_layout(int n, std::int64_t q, int s)
{
    SylowLayout L;
    L.s = s;
    if (q % 4 == 1) {
        L.blocks = n;
    } else {
        L.blocks = n / 2;
        L.has_signs = true;
        L.twist = half_twist(s);
        L.has_extra = n % 2 == 1;
    }
    return L;
}

}  // namespace

std::uint64_t sylow_order_formula(const GroupSpec& spec)
{
    spec.validate();
    if (!spec.is_matrix_family())
        return std::uint64_t{1} << spec.order_exponent;
    const int s = compute_s(spec.q);
    const std::uint64_t gl = gl_sylow_order(spec.n, spec.q);
    const std::uint64_t det_part = spec.q % 4 == 1 ? (std::uint64_t{1} << s) : 2;
    switch (spec.family) {
    case Family::GL:
        return gl;
    case Family::PGL:
    case Family::SL:
        return gl / det_part;
    case Family::SLQuotient: {
        const int v = spec.nprime % 2 == 1 ? 0 : std::min(v2(static_cast<std::uint64_t>(spec.nprime)), s);
        return gl / det_part / (std::uint64_t{1} << v);
    }
    default:
        break;
    }
    fail(ErrorKind::InvalidArgument, "sylow_order_formula: unknown family");
}

SylowGroup build_layout_group(const SylowLayout& layout, const std::string& label)
{
    std::uint64_t order = perm_closure_order(p2_sn_generators(layout.blocks), layout.blocks);
    for (int i = 0; i < layout.blocks; ++i)
        order *= (std::uint64_t{1} << layout.s) * (layout.has_signs ? 2 : 1);
    if (layout.has_extra)
        order *= 2;
    if (layout.diag_step != 0 && layout.blocks > 0)
        order /= (std::uint64_t{1} << layout.s) / layout.diag_step;
    return SylowGroup(GroupSpec{}, layout.s, layout, Constraint::None, wreath_generators(layout), order, label);
}

SylowGroup build_sylow(const GroupSpec& spec) { return build_sylow(spec, spec.natural_s()); }

SylowGroup build_sylow(const GroupSpec& spec, int s)
{
    spec.validate();
    const std::uint64_t order = sylow_order_formula(spec);
    if (!spec.is_matrix_family()) {
        require(s == spec.order_exponent - 1, ErrorKind::InvalidArgument, "build_sylow: s must equal m-1");
        SylowLayout L;
        L.blocks = 1;
        L.s = s;
        L.has_signs = true;
        const std::uint32_t m = 1u << s;
        std::string note;
        if (spec.family == Family::Dihedral) {
            L.twist = m - 1;
            note = "D_{2^{s+1}} = <x,y | x^{2^s}, y^2, yxy = x^{-1}>";
        } else if (spec.family == Family::SemiDihedral) {
            L.twist = half_twist(s);
            note = "SD_{2^{s+1}} = <x,y | x^{2^s}, y^2, yxy = x^{2^{s-1}-1}>";
        } else {
            L.twist = m - 1;
            L.cocycle = m / 2;
            note = "Q_{2^{s+1}} = <w,v | w^{2^s}, v^2 = w^{2^{s-1}}, vwv^{-1} = w^{-1}>";
        }
        return SylowGroup(spec, s, L, Constraint::None, wreath_generators(L), order, note);
    }

    require(s == compute_s(spec.q), ErrorKind::InvalidArgument, "build_sylow: s must equal compute_s(q)");
    const bool q1 = spec.q % 4 == 1;
    const int n = spec.n;
    const std::uint32_t m = 1u << s;

    switch (spec.family) {
    case Family::GL: {
        const SylowLayout L = gl_layout(n, spec.q, s);
        return SylowGroup(spec, s, L, Constraint::None, wreath_generators(L), order,
                          q1 ? "(mu_{2^s})^n x| P_2(S_n)" : "(SD_{2^{s+1}})^m x| P_2(S_m) [x Z/2]");
    }
    case Family::PGL: {
        if (q1) {
            SylowLayout L = gl_layout(n, spec.q, s);
            L.diag_step = 1;
            return SylowGroup(spec, s, L, Constraint::None, wreath_generators(L), order,
                              "(mu_{2^s})^n / diagonal x| P_2(S_n)");
        }
        if (n % 2 == 1) {
            const SylowLayout L = gl_layout(n - 1, spec.q, s);
            return SylowGroup(spec, s, L, Constraint::None, wreath_generators(L), order,
                              "identified with the Sylow 2-subgroup of GL_{n-1}(F_q)");
        }
        SylowLayout L = gl_layout(n, spec.q, s);
        L.diag_step = m / 2;
        return SylowGroup(spec, s, L, Constraint::None, wreath_generators(L), order,
                          "(SD_{2^{s+1}})^m / <(x^{2^{s-1}},...)> x| P_2(S_m)");
    }
    case Family::SL:
    case Family::SLQuotient: {
        SylowLayout L = gl_layout(n, spec.q, s);
        std::vector<SylowElement> gens;
        if (q1) {
            for (int i = 0; i + 1 < n; ++i) {
                SylowElement g = blank(L);
                g.torus[i] = 1;
                g.torus[i + 1] = static_cast<std::int32_t>(m - 1);
                gens.push_back(std::move(g));
            }
            for (auto& p : p2_sn_generators(n)) {
                SylowElement g = blank(L);
                g.perm = p;
                if (perm_sign(p) < 0)
                    g.torus[0] = static_cast<std::int32_t>(m / 2);
                gens.push_back(std::move(g));
            }
        } else {
            require(spec.family == Family::SL, ErrorKind::Unsupported,
                    "build_sylow: SL quotients are only supported for q = 1 mod 4");
            // index-2 kernel of det via Schreier generators with transversal {1, h}
            const SylowGroup ambient(GroupSpec::gl(n, spec.q), s, L, Constraint::None, wreath_generators(L),
                                     gl_sylow_order(n, spec.q), "");
            const auto amb = ambient.generators();
            const SylowElement* h = nullptr;
            for (const auto& g : amb)
                if (ambient.det_q3(g) < 0) {
                    h = &g;
                    break;
                }
            if (h) {
                const SylowElement hinv = ambient.inverse(*h);
                std::set<std::string> seen;
                auto add = [&](SylowElement e) {
                    if (e == ambient.identity())
                        return;
                    if (seen.insert(e.key()).second)
                        gens.push_back(std::move(e));
                };
                for (const auto& g : amb) {
                    if (ambient.det_q3(g) > 0) {
                        add(g);
                        add(ambient.multiply(ambient.multiply(*h, g), hinv));
                    } else {
                        add(ambient.multiply(g, hinv));
                        add(ambient.multiply(*h, g));
                    }
                }
            }
        }
        std::string note = q1 ? "{(a, tau) : sum a = sgn(tau)} in (mu_{2^s})^n x| P_2(S_n)"
                              : "det-1 subgroup of (SD_{2^{s+1}})^m x| P_2(S_m) [x Z/2]";
        if (spec.family == Family::SLQuotient) {
            const int v = spec.nprime % 2 == 1 ? 0 : std::min(v2(static_cast<std::uint64_t>(spec.nprime)), s);
            if (v > 0)
                L.diag_step = m >> v;
            note += " / scalars of order dividing 2^v";
        }
        return SylowGroup(spec, s, L, q1 ? Constraint::SLq1 : Constraint::SLq3, std::move(gens), order, note);
    }
    default:
        break;
    }
    fail(ErrorKind::Unsupported, "build_sylow: unsupported family");
}

std::vector<SylowElement> center(const SylowGroup& g)
{
    const auto& en = g.enumerate();
    std::vector<SylowElement> out;
    for (const auto& z : en.elements) {
        bool central = true;
        for (const auto& h : g.generators())
            if (!(g.multiply(z, h) == g.multiply(h, z))) {
                central = false;
                break;
            }
        if (central)
            out.push_back(z);
    }
    return out;
}

int center_2rank(const SylowGroup& g)
{
    const SylowElement e = g.identity();
    std::uint64_t count = 0;
    for (const auto& z : center(g))
        if (g.multiply(z, z) == e)
            ++count;
    return v2(count);
}

bool check_odd_sl_isomorphism(int n, std::int64_t q)
{
    require(n % 2 == 1 && n >= 3, ErrorKind::InvalidArgument, "check_odd_sl_isomorphism: n must be odd and >= 3");
    const SylowGroup src = build_sylow(GroupSpec::gl(n - 1, q));
    const SylowGroup dst = build_sylow(GroupSpec::sl(n, q));
    const bool q1 = q % 4 == 1;
    const std::int64_t m = std::int64_t{1} << src.s();
    auto phi = [&](const SylowElement& x) {
        SylowElement y = dst.identity();
        if (q1) {
            std::int64_t sum = 0;
            for (int i = 0; i < n - 1; ++i) {
                y.torus[i] = x.torus[i];
                y.perm[i] = x.perm[i];
                sum += x.torus[i];
            }
            const std::int64_t target = perm_sign(x.perm) < 0 ? m / 2 : 0;
            y.torus[n - 1] = static_cast<std::int32_t>(((target - sum) % m + m) % m);
        } else {
            y.torus = x.torus;
            y.signs = x.signs;
            y.perm = x.perm;
            y.extra = src.det_q3(x) < 0 ? 1 : 0;
        }
        return dst.canonical(std::move(y));
    };
    const auto& se = src.enumerate();
    const auto& de = dst.enumerate();
    if (se.elements.size() != de.elements.size())
        return false;
    std::set<std::string> images;
    for (const auto& x : se.elements) {
        const SylowElement fx = phi(x);
        if (!dst.satisfies_constraint(fx) || de.index.find(fx.key()) == de.index.end())
            return false;
        if (!images.insert(fx.key()).second)
            return false;
        for (const auto& h : src.generators())
            if (!(phi(src.multiply(x, h)) == dst.multiply(fx, phi(h))))
                return false;
    }
    return true;
}

RelationReport check_block_relations(const SylowGroup& g)
{
    RelationReport rep;
    const auto& L = g.layout();
    const std::uint32_t m = 1u << L.s;
    auto bad = [&](const std::string& why) {
        rep.ok = false;
        if (!rep.detail.empty())
            rep.detail += "; ";
        rep.detail += why;
    };
    const SylowElement e = g.identity();
    if (L.has_signs) {
        for (int i = 0; i < L.blocks; ++i) {
            SylowElement X = e, Y = e;
            X.torus[i] = 1;
            Y.signs[i] = 1;
            X = g.canonical(X);
            Y = g.canonical(Y);
            const SylowElement Y2 = g.multiply(Y, Y);
            const SylowElement Xh = g.power(X, m / 2);
            if (!(g.power(X, m) == e))
                bad("X^{2^s} != 1 in block " + std::to_string(i));
            if (L.cocycle == 0 ? !(Y2 == e) : !(Y2 == Xh))
                bad("Y^2 relation fails in block " + std::to_string(i));
            if (!(g.multiply(g.multiply(Y, X), g.inverse(Y)) == g.power(X, L.twist)))
                bad("YXY^{-1} = X^t fails in block " + std::to_string(i));
        }
    }
    const GroupSpec& sp = g.spec();
    if ((sp.family == Family::SL || sp.family == Family::SLQuotient) && sp.n == 2) {
        // the quaternion Sylow of SL_2
        SylowElement w = e, v = e;
        std::uint32_t worder = 0;
        if (sp.q % 4 == 1) {
            w.torus = {1, static_cast<std::int32_t>(m - 1)};
            v.torus = {static_cast<std::int32_t>(m / 2), 0};
            v.perm = {1, 0};
            worder = m;
        } else {
            w.torus = {2};
            v.torus = {1};
            v.signs = {1};
            worder = m / 2;
        }
        w = g.canonical(w);
        v = g.canonical(v);
        if (!g.satisfies_constraint(w) || !g.satisfies_constraint(v))
            bad("quaternion generators violate the determinant constraint");
        if (!(g.power(w, worder) == e))
            bad("w^{2^k} != 1");
        if (!(g.multiply(v, v) == g.power(w, worder / 2)))
            bad("v^2 != w^{2^{k-1}}");
        if (!(g.multiply(g.multiply(v, w), g.inverse(v)) == g.inverse(w)))
            bad("vwv^{-1} != w^{-1}");
    }
    return rep;
}

}  // namespace ed2
