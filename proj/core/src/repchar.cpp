#include "ed2/repchar.hpp"

#include "ed2/error.hpp"
#include "ed2/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace ed2 {

namespace {

using u64 = std::uint64_t;

u64 mulm(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 powm(u64 b, u64 e, u64 p)
{
    u64 r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1)
            r = mulm(r, b, p);
        b = mulm(b, b, p);
        e >>= 1;
    }
    return r;
}

u64 invm(u64 a, u64 p)
{
    require(a % p != 0, ErrorKind::InvalidArgument, "modular inverse of zero (internal)");
    return powm(a, p - 2, p);
}

bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

}  // namespace

FiniteGroup::FiniteGroup(std::uint32_t order, MulFn mul, std::vector<std::uint32_t> generators,
                         std::function<std::string(std::uint32_t)> label)
    : order_(order), mul_(std::move(mul)), gens_(std::move(generators)), label_(std::move(label)), inv_(order),
      ord_(order)
{
    for (std::uint32_t a = 0; a < order_; ++a) {
        std::uint32_t prev = 0;
        std::uint32_t cur = a;
        int k = 1;
        while (cur != 0) {
            prev = cur;
            cur = mul_(cur, a);
            ++k;
            require(k <= static_cast<int>(order_) + 1, ErrorKind::InvalidArgument, "FiniteGroup: identity must be 0");
        }
        ord_[a] = a == 0 ? 1 : k;
        inv_[a] = a == 0 ? 0 : prev;
        exponent_ = std::lcm(exponent_, ord_[a]);
    }
}

FiniteGroup FiniteGroup::from_sylow(std::shared_ptr<const SylowGroup> g)
{
    const auto& en = g->enumerate();
    std::vector<std::uint32_t> gens;
    for (const auto& x : g->generators()) {
        const std::uint32_t i = en.find(x);
        if (i != 0 && std::find(gens.begin(), gens.end(), i) == gens.end())
            gens.push_back(i);
    }
    const SylowGroup* raw = g.get();
    const auto* enp = &en;
    FiniteGroup fg(
        static_cast<std::uint32_t>(en.elements.size()),
        [raw, enp](std::uint32_t a, std::uint32_t b) {
            return enp->find(raw->multiply(enp->elements[a], enp->elements[b]));
        },
        std::move(gens), [enp](std::uint32_t a) { return enp->elements[a].to_string(); });
    fg.sylow_ = std::move(g);
    return fg;
}

FiniteGroup FiniteGroup::from_sylow(const SylowGroup& g) { return from_sylow(std::make_shared<const SylowGroup>(g)); }

std::uint32_t FiniteGroup::power(std::uint32_t a, std::uint64_t k) const
{
    std::uint32_t r = 0;
    std::uint32_t b = a;
    while (k) {
        if (k & 1)
            r = mul(r, b);
        b = mul(b, b);
        k >>= 1;
    }
    return r;
}

std::vector<std::uint32_t> FiniteGroup::closure(const std::vector<std::uint32_t>& gens) const
{
    std::vector<std::uint32_t> out{0};
    std::vector<char> seen(order_, 0);
    seen[0] = 1;
    for (std::size_t h = 0; h < out.size(); ++h)
        for (auto g : gens) {
            const std::uint32_t c = mul(out[h], g);
            if (!seen[c]) {
                seen[c] = 1;
                out.push_back(c);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

FiniteGroup FiniteGroup::subgroup(const std::vector<std::uint32_t>& elements) const
{
    std::vector<std::uint32_t> el = elements;
    std::sort(el.begin(), el.end());
    el.erase(std::unique(el.begin(), el.end()), el.end());
    require(!el.empty() && el[0] == 0, ErrorKind::InvalidArgument, "subgroup: must contain the identity");
    std::unordered_map<std::uint32_t, std::uint32_t> local;
    for (std::uint32_t i = 0; i < el.size(); ++i)
        local.emplace(el[i], i);
    const std::size_t k = el.size();
    auto table = std::make_shared<std::vector<std::uint32_t>>(k * k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            auto it = local.find(mul(el[a], el[b]));
            require(it != local.end(), ErrorKind::InvalidArgument, "subgroup: element set is not closed");
            (*table)[a * k + b] = it->second;
        }
    // greedy generating set
    std::vector<std::uint32_t> gens;
    std::vector<char> in(k, 0);
    in[0] = 1;
    std::vector<std::uint32_t> span{0};
    for (std::uint32_t x = 1; x < k; ++x) {
        if (in[x])
            continue;
        gens.push_back(x);
        for (std::size_t h = 0; h < span.size(); ++h)
            for (auto g : gens) {
                const std::uint32_t c = (*table)[span[h] * k + g];
                if (!in[c]) {
                    in[c] = 1;
                    span.push_back(c);
                }
            }
        // close again from the start so products with the new generator are included
        for (std::size_t h = 0; h < span.size(); ++h)
            for (auto g : gens) {
                const std::uint32_t c = (*table)[span[h] * k + g];
                if (!in[c]) {
                    in[c] = 1;
                    span.push_back(c);
                }
            }
    }
    auto parent_label = label_;
    auto parent_labels = el;
    FiniteGroup sub(
        static_cast<std::uint32_t>(k), [table, k](std::uint32_t a, std::uint32_t b) { return (*table)[a * k + b]; },
        std::move(gens), [parent_label, parent_labels](std::uint32_t a) {
            return parent_label ? parent_label(parent_labels[a]) : std::to_string(parent_labels[a]);
        });
    sub.parent_ = el;
    sub.keepalive_ = sylow_ ? std::shared_ptr<const void>(sylow_) : keepalive_;
    return sub;
}

bool FiniteGroup::is_normal(const std::vector<std::uint32_t>& elements) const
{
    std::unordered_set<std::uint32_t> set(elements.begin(), elements.end());
    for (auto n : elements)
        for (auto g : gens_)
            if (!set.count(mul(mul(inv(g), n), g)))
                return false;
    return true;
}

std::vector<std::uint32_t> FiniteGroup::center() const
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t z = 0; z < order_; ++z) {
        bool c = true;
        for (auto g : gens_)
            if (mul(z, g) != mul(g, z)) {
                c = false;
                break;
            }
        if (c)
            out.push_back(z);
    }
    return out;
}

std::vector<std::uint32_t> FiniteGroup::commutator_subgroup() const
{
    std::vector<std::uint32_t> seeds;
    for (auto a : gens_)
        for (auto b : gens_) {
            const std::uint32_t c = mul(mul(inv(a), inv(b)), mul(a, b));
            if (c != 0)
                seeds.push_back(c);
        }
    std::vector<std::uint32_t> h = closure(seeds);
    for (;;) {
        std::unordered_set<std::uint32_t> set(h.begin(), h.end());
        std::size_t before = seeds.size();
        for (auto x : h)
            for (auto g : gens_) {
                const std::uint32_t c = mul(mul(inv(g), x), g);
                if (!set.count(c)) {
                    seeds.push_back(c);
                    set.insert(c);
                }
            }
        if (seeds.size() == before)
            return h;
        h = closure(seeds);
    }
}

ConjClassTable conjugacy_classes(const FiniteGroup& g)
{
    ConjClassTable t;
    const std::uint32_t n = g.order();
    constexpr std::uint32_t none = ~0u;
    t.class_of.assign(n, none);
    for (std::uint32_t x = 0; x < n; ++x) {
        if (t.class_of[x] != none)
            continue;
        const auto id = static_cast<std::uint32_t>(t.reps.size());
        std::vector<std::uint32_t> queue{x};
        t.class_of[x] = id;
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (auto s : g.generators()) {
                const std::uint32_t c = g.mul(g.mul(g.inv(s), queue[h]), s);
                if (t.class_of[c] == none) {
                    t.class_of[c] = id;
                    queue.push_back(c);
                }
            }
        t.reps.push_back(x);
        t.sizes.push_back(queue.size());
    }
    for (auto r : t.reps)
        t.inverse_class.push_back(t.class_of[g.inv(r)]);
    return t;
}

namespace {

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

struct Space {
    std::vector<Vec> cols;
    std::vector<std::size_t> piv;
};

void echelonize(Space& sp, u64 p)
{
    std::vector<Vec> out;
    std::vector<std::size_t> piv;
    for (auto v : sp.cols) {
        for (std::size_t a = 0; a < out.size(); ++a) {
            const u64 f = v[piv[a]];
            if (f == 0)
                continue;
            for (std::size_t r = 0; r < v.size(); ++r)
                v[r] = (v[r] + p - mulm(f, out[a][r], p)) % p;
        }
        std::size_t pr = 0;
        while (pr < v.size() && v[pr] == 0)
            ++pr;
        require(pr < v.size(), ErrorKind::InvalidArgument, "Dixon: dependent basis vectors (internal)");
        const u64 iv = invm(v[pr], p);
        for (auto& x : v)
            x = mulm(x, iv, p);
        for (auto& w : out) {
            const u64 f = w[pr];
            if (f == 0)
                continue;
            for (std::size_t r = 0; r < w.size(); ++r)
                w[r] = (w[r] + p - mulm(f, v[r], p)) % p;
        }
        out.push_back(std::move(v));
        piv.push_back(pr);
    }
    sp.cols = std::move(out);
    sp.piv = std::move(piv);
}

std::vector<u64> charpoly(Mat H, u64 p)
{
    const std::size_t n = H.size();
    for (std::size_t j = 0; j + 2 < n + 0 && j + 1 < n; ++j) {
        std::size_t i = j + 1;
        while (i < n && H[i][j] == 0)
            ++i;
        if (i == n)
            continue;
        if (i != j + 1) {
            std::swap(H[i], H[j + 1]);
            for (std::size_t r = 0; r < n; ++r)
                std::swap(H[r][i], H[r][j + 1]);
        }
        const u64 iv = invm(H[j + 1][j], p);
        for (std::size_t k = j + 2; k < n; ++k) {
            const u64 u = mulm(H[k][j], iv, p);
            if (u == 0)
                continue;
            for (std::size_t c = 0; c < n; ++c)
                H[k][c] = (H[k][c] + p - mulm(u, H[j + 1][c], p)) % p;
            for (std::size_t r = 0; r < n; ++r)
                H[r][j + 1] = (H[r][j + 1] + mulm(u, H[r][k], p)) % p;
        }
    }
    std::vector<std::vector<u64>> P(n + 1);
    P[0] = {1};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<u64> cur(m + 1, 0);
        const u64 h = H[m - 1][m - 1];
        for (std::size_t k = 0; k < P[m - 1].size(); ++k) {
            cur[k + 1] = (cur[k + 1] + P[m - 1][k]) % p;
            cur[k] = (cur[k] + p - mulm(h, P[m - 1][k], p)) % p;
        }
        u64 t = 1;
        for (std::size_t i = 1; i < m; ++i) {
            t = mulm(t, H[m - i][m - i - 1], p);
            const u64 f = mulm(t, H[m - i - 1][m - 1], p);
            if (f == 0)
                continue;
            for (std::size_t k = 0; k < P[m - i - 1].size(); ++k)
                cur[k] = (cur[k] + p - mulm(f, P[m - i - 1][k], p)) % p;
        }
        P[m] = std::move(cur);
    }
    return P[n];
}

std::vector<Vec> nullspace(Mat A, u64 p)
{
    const std::size_t n = A.size();
    std::vector<std::size_t> pivcol;
    std::size_t row = 0;
    for (std::size_t c = 0; c < n && row < n; ++c) {
        std::size_t r = row;
        while (r < n && A[r][c] == 0)
            ++r;
        if (r == n)
            continue;
        std::swap(A[r], A[row]);
        const u64 iv = invm(A[row][c], p);
        for (auto& x : A[row])
            x = mulm(x, iv, p);
        for (std::size_t r2 = 0; r2 < n; ++r2) {
            if (r2 == row || A[r2][c] == 0)
                continue;
            const u64 f = A[r2][c];
            for (std::size_t k = 0; k < n; ++k)
                A[r2][k] = (A[r2][k] + p - mulm(f, A[row][k], p)) % p;
        }
        pivcol.push_back(c);
        ++row;
    }
    std::vector<char> is_piv(n, 0);
    for (auto c : pivcol)
        is_piv[c] = 1;
    std::vector<Vec> out;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_piv[f])
            continue;
        Vec v(n, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivcol.size(); ++r)
            v[pivcol[r]] = (p - A[r][f]) % p;
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

CharacterTable character_table(const SylowGroup& g) { return character_table(FiniteGroup::from_sylow(g)); }

CharacterTable character_table(const FiniteGroup& g)
{
    CharacterTable T;
    T.classes = conjugacy_classes(g);
    T.group_order = g.order();
    const auto& C = T.classes;
    const std::size_t r = C.count();
    const u64 e = static_cast<u64>(g.exponent());
    require(is_pow2(e), ErrorKind::InvalidArgument, "character_table: exponent must be a power of two");
    T.modulus = static_cast<std::uint32_t>(std::max<u64>(e, 2));

    u64 p = e + 1;
    while (p <= 2 * static_cast<u64>(g.order()) || !is_prime(p))
        p += e;
    T.prime = p;
    u64 z = 0;
    for (u64 x = 2; x < p; ++x) {
        const u64 y = powm(x, (p - 1) / e, p);
        if (e == 1 || powm(y, e / 2, p) != 1) {
            z = y;
            break;
        }
    }
    require(z != 0, ErrorKind::InvalidArgument, "character_table: no primitive root of unity (internal)");

    std::vector<std::vector<std::uint32_t>> members(r);
    for (std::uint32_t x = 0; x < g.order(); ++x)
        members[C.class_of[x]].push_back(x);

    auto class_matrix = [&](std::size_t i) {
        Mat M(r, Vec(r, 0));
        for (std::size_t k = 0; k < r; ++k) {
            const std::uint32_t zk = C.reps[k];
            for (auto x : members[i])
                ++M[C.class_of[g.mul(g.inv(x), zk)]][k];
        }
        for (auto& row : M)
            for (auto& v : row)
                v %= p;
        return M;
    };

    std::vector<Space> spaces(1);
    for (std::size_t k = 0; k < r; ++k) {
        Vec v(r, 0);
        v[k] = 1;
        spaces[0].cols.push_back(std::move(v));
        spaces[0].piv.push_back(k);
    }
    std::vector<std::size_t> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return C.sizes[a] < C.sizes[b]; });

    auto done = [&] {
        for (const auto& sp : spaces)
            if (sp.cols.size() > 1)
                return false;
        return true;
    };
    for (std::size_t ci : order) {
        if (done())
            break;
        if (C.sizes[ci] == 1 && C.reps[ci] == 0)
            continue;
        const Mat M = class_matrix(ci);
        std::vector<Space> next;
        for (auto& sp : spaces) {
            const std::size_t d = sp.cols.size();
            if (d == 1) {
                next.push_back(std::move(sp));
                continue;
            }
            Mat A(d, Vec(d, 0));
            for (std::size_t b = 0; b < d; ++b) {
                for (std::size_t a = 0; a < d; ++a) {
                    const std::size_t row = sp.piv[a];
                    u64 acc = 0;
                    for (std::size_t k = 0; k < r; ++k)
                        if (M[row][k] && sp.cols[b][k])
                            acc = (acc + mulm(M[row][k], sp.cols[b][k], p)) % p;
                    A[a][b] = acc;
                }
            }
            const auto poly = charpoly(A, p);
            std::vector<u64> roots;
            for (u64 x = 0; x < p; ++x) {
                u64 acc = 0;
                for (std::size_t k = poly.size(); k-- > 0;)
                    acc = (mulm(acc, x, p) + poly[k]) % p;
                if (acc == 0)
                    roots.push_back(x);
            }
            require(!roots.empty(), ErrorKind::InvalidArgument, "Dixon: no eigenvalue found (internal)");
            if (roots.size() == 1) {
                next.push_back(std::move(sp));
                continue;
            }
            std::size_t total = 0;
            for (u64 lam : roots) {
                Mat B = A;
                for (std::size_t a = 0; a < d; ++a)
                    B[a][a] = (B[a][a] + p - lam) % p;
                const auto ns = nullspace(B, p);
                total += ns.size();
                Space part;
                for (const auto& nv : ns) {
                    Vec col(r, 0);
                    for (std::size_t b = 0; b < d; ++b)
                        if (nv[b])
                            for (std::size_t k = 0; k < r; ++k)
                                col[k] = (col[k] + mulm(nv[b], sp.cols[b][k], p)) % p;
                    part.cols.push_back(std::move(col));
                }
                echelonize(part, p);
                next.push_back(std::move(part));
            }
            require(total == d, ErrorKind::InvalidArgument, "Dixon: class operator not diagonalizable (internal)");
        }
        spaces = std::move(next);
    }
    require(done() && spaces.size() == r, ErrorKind::InvalidArgument, "Dixon: eigenspaces did not split (internal)");

    const u64 G = g.order();
    for (const auto& sp : spaces) {
        Vec w = sp.cols[0];
        require(w[0] != 0, ErrorKind::InvalidArgument, "Dixon: zero central character at identity (internal)");
        const u64 iv0 = invm(w[0], p);
        for (auto& x : w)
            x = mulm(x, iv0, p);
        u64 S = 0;
        for (std::size_t j = 0; j < r; ++j)
            S = (S + mulm(mulm(w[j], w[C.inverse_class[j]], p), invm(C.sizes[j] % p, p), p)) % p;
        const u64 d2 = mulm(G % p, invm(S, p), p);
        u64 deg = 0;
        while ((deg + 1) * (deg + 1) <= d2)
            ++deg;
        require(deg * deg == d2 && d2 <= G, ErrorKind::InvalidArgument, "Dixon: degree is not an integer (internal)");
        Vec chi(r);
        for (std::size_t j = 0; j < r; ++j)
            chi[j] = mulm(mulm(w[j], deg, p), invm(C.sizes[j] % p, p), p);

        Character ch;
        ch.degree = static_cast<std::int64_t>(deg);
        for (std::size_t j = 0; j < r; ++j) {
            const std::uint32_t gj = C.reps[j];
            const u64 o = static_cast<u64>(g.element_order(gj));
            std::vector<u64> vals(o);
            std::uint32_t cur = 0;
            for (u64 l = 0; l < o; ++l) {
                vals[l] = chi[C.class_of[cur]];
                cur = g.mul(cur, gj);
            }
            const u64 zo = powm(z, e / o, p);
            const u64 izo = invm(zo, p);
            const u64 io = invm(o % p, p);
            std::vector<std::int64_t> coeffs(e, 0);
            std::int64_t msum = 0;
            for (u64 k = 0; k < o; ++k) {
                u64 acc = 0;
                const u64 step = powm(izo, k, p);
                u64 f = 1;
                for (u64 l = 0; l < o; ++l) {
                    acc = (acc + mulm(vals[l], f, p)) % p;
                    f = mulm(f, step, p);
                }
                const u64 mk = mulm(acc, io, p);
                require(mk <= deg, ErrorKind::InvalidArgument, "Dixon: eigenvalue multiplicity out of range (internal)");
                coeffs[k * (e / o)] += static_cast<std::int64_t>(mk);
                msum += static_cast<std::int64_t>(mk);
            }
            require(msum == static_cast<std::int64_t>(deg), ErrorKind::InvalidArgument,
                    "Dixon: multiplicities do not sum to the degree (internal)");
            CycInt val(T.modulus, coeffs);
            require(val.reduce_mod(p, z) == chi[j], ErrorKind::InvalidArgument, "Dixon: lift mismatch (internal)");
            ch.class_values.push_back(std::move(val));
        }
        T.chars.push_back(std::move(ch));
    }
    std::sort(T.chars.begin(), T.chars.end(), [](const Character& a, const Character& b) {
        if (a.degree != b.degree)
            return a.degree < b.degree;
        for (std::size_t j = 0; j < a.class_values.size(); ++j) {
            const auto& x = a.class_values[j].coeffs();
            const auto& y = b.class_values[j].coeffs();
            if (x != y)
                return x > y;
        }
        return false;
    });
    return T;
}

bool check_orthogonality(const CharacterTable& t)
{
    const std::size_t r = t.classes.count();
    if (t.chars.size() != r)
        return false;
    std::vector<std::vector<CycInt>> conjw(r);
    for (std::size_t b = 0; b < r; ++b)
        for (std::size_t j = 0; j < r; ++j)
            conjw[b].push_back(t.chars[b].class_values[j].conj() * static_cast<std::int64_t>(t.classes.sizes[j]));
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a; b < r; ++b) {
            CycInt acc(t.modulus, 0);
            for (std::size_t j = 0; j < r; ++j)
                acc += t.chars[a].class_values[j] * conjw[b][j];
            const std::int64_t want = a == b ? static_cast<std::int64_t>(t.group_order) : 0;
            if (!(acc == CycInt(t.modulus, want)))
                return false;
        }
    return true;
}

std::vector<std::int64_t> degree_multiset(const CharacterTable& t)
{
    std::vector<std::int64_t> d;
    for (const auto& c : t.chars)
        d.push_back(c.degree);
    std::sort(d.begin(), d.end());
    return d;
}

std::size_t linear_character_count(const CharacterTable& t)
{
    return static_cast<std::size_t>(std::count_if(t.chars.begin(), t.chars.end(), [](const Character& c) { return c.degree == 1; }));
}

namespace {

std::string row_key(const std::vector<CycInt>& row, std::uint32_t m)
{
    std::string k;
    for (const auto& v : row)
        k += v.lifted(std::max(m, v.modulus())).to_string() + ";";
    return k;
}

}  // namespace

bool check_galois_stability(const CharacterTable& t)
{
    std::set<std::string> rows;
    for (const auto& c : t.chars)
        rows.insert(row_key(c.class_values, t.modulus));
    for (std::int64_t u = 3; u < static_cast<std::int64_t>(t.modulus); u += 2)
        for (const auto& c : t.chars) {
            std::vector<CycInt> img;
            for (const auto& v : c.class_values)
                img.push_back(v.galois(u));
            if (!rows.count(row_key(img, t.modulus)))
                return false;
        }
    return true;
}

std::vector<KnownCharacter> known_table(SmallFamily family, int s)
{
    require(s >= 2, ErrorKind::InvalidArgument, "known_table: s must be >= 2");
    require(family != SmallFamily::SD || s >= 3, ErrorKind::InvalidArgument, "known_table: SD needs s >= 3");
    const std::int64_t m = std::int64_t{1} << s;
    const auto M = static_cast<std::uint32_t>(m);
    std::vector<KnownCharacter> out;
    const char* lin_names[2][2] = {{"triv", "psi_1"}, {"psi_half", "psi_half*psi_1"}};
    for (int alpha = 0; alpha < 2; ++alpha)
        for (int beta = 0; beta < 2; ++beta)
            out.push_back({lin_names[alpha][beta], 1, [M, alpha, beta](std::int64_t a, int b) {
                               const bool neg = ((alpha * a + beta * b) % 2) != 0;
                               return CycInt(M, neg ? -1 : 1);
                           }});
    const std::int64_t t = family == SmallFamily::SD ? (m / 2 - 1) : (m - 1);
    std::vector<char> used(m, 0);
    for (std::int64_t i = 1; i < m; ++i) {
        const std::int64_t j = (i * t) % m;
        if (used[i] || j == i)
            continue;
        used[i] = used[j] = 1;
        out.push_back({"chi_" + std::to_string(i), 2, [M, i, t](std::int64_t a, int b) {
                           if (b != 0)
                               return CycInt(M, 0);
                           return CycInt::root_power(M, a * i) + CycInt::root_power(M, a * i * t);
                       }});
    }
    return out;
}

std::vector<Character> known_table_on(SmallFamily family, int s, const FiniteGroup& g, const ConjClassTable& cls)
{
    auto sy = g.sylow();
    require(sy && sy->layout().blocks == 1 && sy->layout().has_signs && sy->s() == s, ErrorKind::InvalidArgument,
            "known_table_on: group must be a D/SD/Q Sylow group with matching s");
    const auto& en = sy->enumerate();
    std::vector<Character> out;
    for (const auto& kc : known_table(family, s)) {
        Character c;
        c.degree = kc.degree;
        for (auto rep : cls.reps) {
            const auto& el = en.elements[rep];
            c.class_values.push_back(kc.eval(el.torus[0], el.signs[0]));
        }
        out.push_back(std::move(c));
    }
    return out;
}

bool tables_match_up_to_permutation(const std::vector<Character>& a, const std::vector<Character>& b)
{
    if (a.size() != b.size())
        return false;
    std::uint32_t m = 2;
    for (const auto* t : {&a, &b})
        for (const auto& c : *t)
            for (const auto& v : c.class_values)
                m = std::max(m, v.modulus());
    std::multiset<std::string> ka, kb;
    for (const auto& c : a)
        ka.insert(row_key(c.class_values, m));
    for (const auto& c : b)
        kb.insert(row_key(c.class_values, m));
    return ka == kb;
}

std::vector<CycInt> restrict_character(const Character& chi, const ConjClassTable& gcls, const FiniteGroup& h,
                                       const ConjClassTable& hcls)
{
    std::vector<CycInt> out;
    const auto& par = h.parent_index();
    for (auto rep : hcls.reps) {
        const std::uint32_t gi = par.empty() ? rep : par[rep];
        out.push_back(chi.class_values[gcls.class_of[gi]]);
    }
    return out;
}

CliffordReport clifford_check(const FiniteGroup& g, const CharacterTable& gt, const std::vector<std::uint32_t>& n_elems,
                              std::size_t chi_index)
{
    CliffordReport rep;
    rep.normal = g.is_normal(n_elems);
    require(rep.normal, ErrorKind::InvalidArgument, "clifford_check: N is not normal");
    require(chi_index < gt.chars.size(), ErrorKind::InvalidArgument, "clifford_check: character index out of range");
    const FiniteGroup N = g.subgroup(n_elems);
    const CharacterTable nt = character_table(N);
    const auto res = restrict_character(gt.chars[chi_index], gt.classes, N, nt.classes);
    const std::uint32_t m = std::max(gt.modulus, nt.modulus);
    for (std::size_t k = 0; k < nt.chars.size(); ++k) {
        CycInt acc(m, 0);
        for (std::size_t j = 0; j < nt.classes.count(); ++j)
            acc += res[j] * nt.chars[k].class_values[j].conj() * static_cast<std::int64_t>(nt.classes.sizes[j]);
        const std::int64_t total = acc.integer_value();
        require(total % static_cast<std::int64_t>(N.order()) == 0, ErrorKind::InvalidArgument,
                "clifford_check: non-integral multiplicity (internal)");
        const std::int64_t mult = total / static_cast<std::int64_t>(N.order());
        if (mult > 0) {
            rep.constituents.push_back(k);
            rep.multiplicities.push_back(mult);
        }
    }
    // G acts on Irr(N) by conjugation; follow the action on rows
    std::map<std::string, std::size_t> row_index;
    for (std::size_t k = 0; k < nt.chars.size(); ++k)
        row_index[row_key(nt.chars[k].class_values, m)] = k;
    std::unordered_map<std::uint32_t, std::uint32_t> local;
    for (std::uint32_t i = 0; i < N.parent_index().size(); ++i)
        local[N.parent_index()[i]] = i;
    auto act = [&](std::uint32_t gg, std::size_t k) {
        std::vector<CycInt> row;
        for (auto r : nt.classes.reps) {
            const std::uint32_t pr = N.parent_index()[r];
            const std::uint32_t c = g.mul(g.mul(g.inv(gg), pr), gg);
            row.push_back(nt.chars[k].class_values[nt.classes.class_of[local.at(c)]]);
        }
        return row_index.at(row_key(row, m));
    };
    std::set<std::size_t> orbit;
    if (!rep.constituents.empty()) {
        std::vector<std::size_t> queue{rep.constituents[0]};
        orbit.insert(rep.constituents[0]);
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (auto gg : g.generators()) {
                const std::size_t k2 = act(gg, queue[h]);
                if (orbit.insert(k2).second)
                    queue.push_back(k2);
            }
    }
    rep.single_orbit = orbit == std::set<std::size_t>(rep.constituents.begin(), rep.constituents.end());
    rep.equal_multiplicities = !rep.multiplicities.empty() &&
                               std::all_of(rep.multiplicities.begin(), rep.multiplicities.end(),
                                           [&](std::int64_t x) { return x == rep.multiplicities[0]; });
    return rep;
}

CentralTwoTorsion central_two_torsion(const FiniteGroup& g)
{
    CentralTwoTorsion z;
    for (auto c : g.center())
        if (g.mul(c, c) == 0)
            z.elements.push_back(c);
    std::set<std::uint32_t> span{0};
    for (auto c : z.elements) {
        if (span.count(c))
            continue;
        z.basis.push_back(c);
        std::vector<std::uint32_t> add;
        for (auto x : span)
            add.push_back(g.mul(x, c));
        span.insert(add.begin(), add.end());
    }
    return z;
}

std::vector<std::uint8_t> central_character(const Character& chi, const ConjClassTable& cls, const CentralTwoTorsion& z)
{
    std::vector<std::uint8_t> bits;
    for (auto b : z.basis) {
        const CycInt& v = chi.class_values[cls.class_of[b]];
        if (v == CycInt(v.modulus(), chi.degree))
            bits.push_back(0);
        else if (v == CycInt(v.modulus(), -chi.degree))
            bits.push_back(1);
        else
            fail(ErrorKind::InvalidArgument, "central_character: central value is not +-degree (character not irreducible)");
    }
    return bits;
}

bool quaternion_idempotent_check(int s)
{
    require(s >= 2, ErrorKind::InvalidArgument, "quaternion_idempotent_check: s must be >= 2");
    const SylowGroup Q = build_sylow(GroupSpec::quaternion(s + 1));
    const auto& en = Q.enumerate();
    const std::size_t n = en.elements.size();
    const auto M = static_cast<std::uint32_t>(1u << s);
    const std::int64_t m = M;
    using Alg = std::vector<CycRat>;
    auto zero = [&] { return Alg(n, CycRat::from_int(M, 0)); };
    auto elem = [&](std::int64_t a, int b) {
        SylowElement x = Q.identity();
        x.torus[0] = static_cast<std::int32_t>(((a % m) + m) % m);
        x.signs[0] = static_cast<std::uint8_t>(b);
        return en.find(x);
    };
    std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table[a][b] = en.find(Q.multiply(en.elements[a], en.elements[b]));
    auto mul = [&](const Alg& x, const Alg& y) {
        Alg r = zero();
        for (std::size_t a = 0; a < n; ++a) {
            if (x[a].is_zero())
                continue;
            for (std::size_t b = 0; b < n; ++b) {
                if (y[b].is_zero())
                    continue;
                r[table[a][b]] = r[table[a][b]] + x[a] * y[b];
            }
        }
        return r;
    };
    auto is_zero = [](const Alg& x) {
        return std::all_of(x.begin(), x.end(), [](const CycRat& c) { return c.is_zero(); });
    };
    auto same = [](const Alg& x, const Alg& y) {
        for (std::size_t k = 0; k < x.size(); ++k)
            if (!(x[k] == y[k]))
                return false;
        return true;
    };
    const std::int64_t order = 2 * m;
    std::vector<Alg> idem;
    std::vector<int> e_index;
    for (std::int64_t i = 1; i <= m / 2 - 1; ++i) {
        Alg e = zero();
        for (std::int64_t a = 1; a <= m; ++a) {
            const CycInt c = CycInt::root_power(M, a * i) + CycInt::root_power(M, -a * i);
            e[elem(a, 0)] = CycRat(c * 2, order);
        }
        idem.push_back(std::move(e));
        e_index.push_back(static_cast<int>(i));
    }
    const std::size_t n_e = idem.size();
    for (int alpha = 0; alpha < 2; ++alpha)
        for (int beta = 0; beta < 2; ++beta) {
            Alg f = zero();
            for (std::int64_t a = 0; a < m; ++a)
                for (int b = 0; b < 2; ++b) {
                    const bool neg = ((alpha * a + beta * b) % 2) != 0;
                    f[elem(a, b)] = CycRat(CycInt(M, neg ? -1 : 1), order);
                }
            idem.push_back(std::move(f));
        }
    Alg sum_odd = zero();
    for (std::size_t k = 0; k < n_e; ++k)
        if (e_index[k] % 2 == 1)
            for (std::size_t x = 0; x < n; ++x)
                sum_odd[x] = sum_odd[x] + idem[k][x];
    Alg target = zero();
    target[elem(0, 0)] = CycRat(CycInt(M, 1), 2);
    target[elem(m / 2, 0)] = CycRat(CycInt(M, -1), 2);
    if (!same(sum_odd, target))
        return false;
    Alg total = zero();
    for (std::size_t k = 0; k < idem.size(); ++k) {
        if (!same(mul(idem[k], idem[k]), idem[k]))
            return false;
        for (std::size_t l = k + 1; l < idem.size(); ++l)
            if (!is_zero(mul(idem[k], idem[l])))
                return false;
        for (std::size_t x = 0; x < n; ++x)
            total[x] = total[x] + idem[k][x];
    }
    Alg one = zero();
    one[elem(0, 0)] = CycRat::from_int(M, 1);
    return same(total, one);
}

}  // namespace ed2
