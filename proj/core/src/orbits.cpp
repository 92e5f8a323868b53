#include "ed2/orbits.hpp"

#include "ed2/error.hpp"
#include "ed2/repchar.hpp"
#include "ed2/sylow.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace ed2 {

using Vec = std::vector<std::int64_t>;

std::string orbit_target_name(OrbitTarget t)
{
    switch (t) {
    case OrbitTarget::PlainVector:
        return "plain";
    case OrbitTarget::DiagonalQuotient:
        return "diagonal";
    case OrbitTarget::GammaQuotient:
        return "gamma";
    case OrbitTarget::SignTwisted:
        return "signtwisted";
    }
    return "?";
}

namespace {

std::string vec_string(const Vec& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

std::string gamma_string(const UnitSubgroup& g)
{
    std::string out;
    for (std::size_t i = 0; i < g.elements.size(); ++i)
        out += (i ? "," : "") + std::to_string(g.elements[i]);
    return out;
}

constexpr std::uint64_t kScanLimit = std::uint64_t{1} << 24;
constexpr std::size_t kLinearProbe = 256;

class Action {
public:
    explicit Action(const OrbitActionSpec& spec) : n_(spec.n), s_(spec.s), M_(std::int64_t{1} << spec.s)
    {
        require(n_ >= 1 && n_ <= 10, ErrorKind::BoundExceeded, "orbit: n must be in [1,10]");
        require(s_ >= 1 && n_ * s_ <= 62, ErrorKind::BoundExceeded, "orbit: n*s too large");
        perms_ = p2_sn_generators(n_);
        diag_ = spec.target == OrbitTarget::DiagonalQuotient;
        signs_ = spec.target == OrbitTarget::SignTwisted;
        twist_ = s_ >= 2 ? half_twist(s_) : 1;
        if (spec.gamma) {
            require(spec.gamma->s == s_, ErrorKind::InvalidArgument, "orbit: gamma modulus differs from 2^s");
            require(spec.target != OrbitTarget::PlainVector || spec.gamma->is_trivial(), ErrorKind::InvalidArgument,
                    "orbit: the plain target takes no gamma");
            for (auto g : spec.gamma->elements)
                gamma_.push_back(static_cast<std::int64_t>(g));
        } else {
            gamma_.push_back(1);
        }
        identity_canon_ = !diag_ && gamma_.size() == 1;
    }

    int n() const { return n_; }
    std::int64_t modulus() const { return M_; }
    std::uint64_t space() const { return std::uint64_t{1} << (n_ * s_); }

    std::uint64_t encode(const Vec& v) const
    {
        std::uint64_t x = 0;
        for (int i = n_ - 1; i >= 0; --i)
            x = (x << s_) | static_cast<std::uint64_t>(v[i]);
        return x;
    }

    Vec decode(std::uint64_t x) const
    {
        Vec v(n_);
        for (int i = 0; i < n_; ++i) {
            v[i] = static_cast<std::int64_t>(x & static_cast<std::uint64_t>(M_ - 1));
            x >>= s_;
        }
        return v;
    }

    Vec canon(const Vec& a) const
    {
        Vec best;
        std::uint64_t best_key = 0;
        for (auto g : gamma_) {
            Vec w(n_);
            for (int i = 0; i < n_; ++i)
                w[i] = mod_pow2(a[i] * g, s_);
            if (diag_) {
                const std::int64_t x = w[0];
                for (auto& e : w)
                    e = mod_pow2(e - x, s_);
            }
            const std::uint64_t key = encode(w);
            if (best.empty() || key < best_key) {
                best = std::move(w);
                best_key = key;
            }
        }
        return best;
    }

    template <class F>
    void for_each_neighbor(const Vec& v, F&& f) const
    {
        Vec r(n_);
        for (const auto& p : perms_) {
            for (int j = 0; j < n_; ++j)
                r[p[j]] = v[j];
            f(canon(r));
        }
        if (signs_)
            for (int i = 0; i < n_; ++i) {
                r = v;
                r[i] = mod_pow2(r[i] * twist_, s_);
                f(canon(r));
            }
    }

    template <class F>
    void for_each_neighbor_key(std::uint64_t key, F&& f) const
    {
        if (!identity_canon_) {
            for_each_neighbor(decode(key), [&](const Vec& w) { f(encode(w)); });
            return;
        }
        const auto mask = static_cast<std::uint64_t>(M_ - 1);
        for (const auto& p : perms_) {
            std::uint64_t r = 0;
            for (int j = 0; j < n_; ++j)
                r |= ((key >> (j * s_)) & mask) << (p[j] * s_);
            f(r);
        }
        if (signs_)
            for (int i = 0; i < n_; ++i) {
                const std::uint64_t d = (key >> (i * s_)) & mask;
                const std::uint64_t d2 = (d * static_cast<std::uint64_t>(twist_)) & mask;
                f((key & ~(mask << (i * s_))) | (d2 << (i * s_)));
            }
    }

    // canonical members of the orbit of canonical c
    std::vector<std::uint64_t> orbit(const Vec& c) const
    {
        std::unordered_set<std::uint64_t> seen;
        std::vector<std::uint64_t> out{encode(c)};
        auto fresh = [&](std::uint64_t k) {
            if (out.size() <= kLinearProbe)
                return std::find(out.begin(), out.end(), k) == out.end();
            if (seen.empty())
                seen.insert(out.begin(), out.end());
            return seen.insert(k).second;
        };
        for (std::size_t h = 0; h < out.size(); ++h)
            for_each_neighbor_key(out[h], [&](std::uint64_t k) {
                if (fresh(k)) {
                    out.push_back(k);
                    if (!seen.empty())
                        seen.insert(k);
                }
            });
        return out;
    }

    // visits every orbit of the quotient once: f(members)
    template <class F>
    void scan(F&& f) const
    {
        require(space() <= kScanLimit, ErrorKind::BoundExceeded, "orbit scan: state space larger than 2^24");
        std::vector<bool> visited(space(), false);
        for (std::uint64_t idx = 0; idx < space(); ++idx) {
            if (visited[idx])
                continue;
            const Vec c = decode(idx);
            if (!identity_canon_ && encode(canon(c)) != idx)
                continue;
            const auto members = orbit(c);
            for (auto m : members)
                visited[m] = true;
            f(members);
        }
    }

private:
    int n_;
    int s_;
    std::int64_t M_;
    std::vector<Perm> perms_;
    bool diag_ = false;
    bool signs_ = false;
    std::int64_t twist_ = 1;
    std::vector<std::int64_t> gamma_;
    bool identity_canon_ = false;
};

// I_j blocks: two halves for n = 2^t, else the P_2(S_n) orbits
std::vector<std::vector<int>> lemma_blocks(int n)
{
    if (n >= 2 && is_pow2(static_cast<std::uint64_t>(n))) {
        std::vector<std::vector<int>> out(2);
        for (int i = 0; i < n; ++i)
            out[i < n / 2 ? 0 : 1].push_back(i);
        return out;
    }
    return block_orbits(n);
}

std::int64_t block_sum(const Vec& a, const std::vector<int>& block)
{
    std::int64_t x = 0;
    for (int i : block)
        x += a[i];
    return x;
}

std::int64_t vec_sum(const Vec& a)
{
    return std::accumulate(a.begin(), a.end(), std::int64_t{0});
}

bool odd(std::int64_t x) { return (x & 1) != 0; }

constexpr std::size_t kMaxListed = 20;

void note_violation(LemmaCell& cell, const Vec& a, std::int64_t got)
{
    if (cell.violations.size() < kMaxListed)
        cell.violations.push_back("a=" + vec_string(a) + " orbit=" + std::to_string(got) +
                                  " bound=" + std::to_string(cell.bound));
    else if (cell.violations.size() == kMaxListed)
        cell.violations.push_back("...");
}

void record(LemmaCell& cell, const Vec& a, std::int64_t size)
{
    ++cell.count_scanned;
    if (cell.min_achieved < 0 || size < cell.min_achieved)
        cell.min_achieved = size;
    if (size < cell.bound)
        note_violation(cell, a, size);
}

template <class Hyp>
LemmaCell threshold_scan(const OrbitActionSpec& spec, std::int64_t bound, Hyp hyp)
{
    LemmaCell cell;
    cell.bound = bound;
    cell.method = "exhaustive";
    const Action act(spec);
    act.scan([&](const std::vector<std::uint64_t>& members) {
        const auto size = static_cast<std::int64_t>(members.size());
        for (auto m : members) {
            const Vec a = act.decode(m);
            if (hyp(a))
                record(cell, a, size);
        }
    });
    return cell;
}

std::vector<int> even_divisors(int n)
{
    std::vector<int> out;
    for (int d = 2; d <= n; d += 2)
        if (n % d == 0)
            out.push_back(d);
    return out;
}

int v_of(int nprime, int s) { return std::min(v2(static_cast<std::uint64_t>(nprime)), s); }

}  // namespace

std::string OrbitActionSpec::to_string() const
{
    std::string out = "n=" + std::to_string(n) + ";s=" + std::to_string(s) + ";target=" + orbit_target_name(target);
    if (nprime)
        out += ";nprime=" + std::to_string(nprime);
    if (gamma)
        out += ";gamma=" + gamma_string(*gamma);
    return out;
}

std::vector<std::int64_t> orbit_canonical(const std::vector<std::int64_t>& a, const OrbitActionSpec& spec)
{
    require(static_cast<int>(a.size()) == spec.n, ErrorKind::InvalidArgument, "orbit: vector length differs from n");
    const Action act(spec);
    Vec b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        b[i] = mod_pow2(a[i], spec.s);
    return act.canon(b);
}

std::uint64_t orbit_size(const std::vector<std::int64_t>& a, const OrbitActionSpec& spec)
{
    const Action act(spec);
    return act.orbit(orbit_canonical(a, spec)).size();
}

std::uint64_t representation_orbit_size(const std::vector<std::int64_t>& a, int s)
{
    const int n = static_cast<int>(a.size());
    const std::uint32_t M = 1u << s;
    std::uint64_t order = 1;
    for (int i = 0; i < n; ++i)
        order *= M;
    require(order <= 4096, ErrorKind::BoundExceeded, "representation_orbit_size: group larger than 4096");
    auto digit = [&](std::uint32_t x, int i) { return (x >> (i * s)) & (M - 1); };
    auto mul = [=](std::uint32_t x, std::uint32_t y) {
        std::uint32_t r = 0;
        for (int i = 0; i < n; ++i)
            r |= ((digit(x, i) + digit(y, i)) & (M - 1)) << (i * s);
        return r;
    };
    std::vector<std::uint32_t> gens;
    for (int i = 0; i < n; ++i)
        gens.push_back(1u << (i * s));
    const FiniteGroup g(static_cast<std::uint32_t>(order), mul, gens);
    const CharacterTable t = character_table(g);

    auto row_key = [&](const std::vector<CycInt>& vals) {
        std::string k;
        for (const auto& v : vals)
            k += v.lifted(t.modulus).to_string() + ";";
        return k;
    };
    std::map<std::string, std::size_t> row_of;
    for (std::size_t r = 0; r < t.chars.size(); ++r)
        row_of[row_key(t.chars[r].class_values)] = r;

    // Psi_a(x) = zeta^{a.x}
    std::vector<CycInt> psi;
    for (auto x : t.classes.reps) {
        std::int64_t e = 0;
        for (int i = 0; i < n; ++i)
            e += a[i] * static_cast<std::int64_t>(digit(x, i));
        psi.push_back(CycInt::root_power(M, e));
    }
    const std::size_t start = row_of.at(row_key(psi));

    const auto perms = p2_sn_generators(n);
    auto permute = [&](std::uint32_t x, const Perm& p) {
        std::uint32_t r = 0;
        for (int j = 0; j < n; ++j)
            r |= digit(x, j) << (p[j] * s);
        return r;
    };
    std::set<std::size_t> seen{start};
    std::vector<std::size_t> queue{start};
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (const auto& p : perms) {
            std::vector<CycInt> vals;
            for (auto x : t.classes.reps)
                vals.push_back(t.chars[queue[h]].class_values[t.classes.class_of[permute(x, p)]]);
            const std::size_t r = row_of.at(row_key(vals));
            if (seen.insert(r).second)
                queue.push_back(r);
        }
    return queue.size();
}

std::string orbit_lemma_name(OrbitLemma l)
{
    switch (l) {
    case OrbitLemma::IrrH1:
        return "irrH1";
    case OrbitLemma::IrrH2:
        return "irrH2";
    case OrbitLemma::IrrH2Prime:
        return "irrH2prime";
    case OrbitLemma::GammaAction:
        return "gammaaction";
    case OrbitLemma::Irr:
        return "irr";
    case OrbitLemma::IrrHPSLn3:
        return "irrHPSLn3";
    case OrbitLemma::IrrHPSLn1:
        return "irrHPSLn1";
    }
    return "?";
}

OrbitLemma parse_orbit_lemma(const std::string& name)
{
    for (auto l : {OrbitLemma::IrrH1, OrbitLemma::IrrH2, OrbitLemma::IrrH2Prime, OrbitLemma::GammaAction,
                   OrbitLemma::Irr, OrbitLemma::IrrHPSLn3, OrbitLemma::IrrHPSLn1})
        if (orbit_lemma_name(l) == name)
            return l;
    if (name == "irrH2'")
        return OrbitLemma::IrrH2Prime;
    fail(ErrorKind::InvalidArgument, "unknown lemma: " + name);
}

LemmaCell irrh1_exhaustive_scan(int n, int s)
{
    const int k = v2(static_cast<std::uint64_t>(n));
    OrbitActionSpec spec{n, s, OrbitTarget::PlainVector, 0, std::nullopt};
    return threshold_scan(spec, std::int64_t{1} << k, [](const Vec& a) { return odd(vec_sum(a)); });
}

LemmaCell irrh1_partition_scan(int n, int s)
{
    const int k = v2(static_cast<std::uint64_t>(n));
    const std::int64_t M = std::int64_t{1} << s;
    LemmaCell cell;
    cell.bound = std::int64_t{1} << k;
    cell.method = "partition";
    OrbitActionSpec spec{n, s, OrbitTarget::PlainVector, 0, std::nullopt};
    const Action act(spec);
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> rec = [&](int i, int nblocks) {
        if (i == n) {
            if (nblocks > M)
                return;
            std::vector<int> size(nblocks, 0);
            for (int x : rgs)
                ++size[x];
            int o = 0;
            for (int z : size)
                o += z % 2;
            int j = -1;
            for (int c = 1; c <= o; c += 2)
                if (c <= M / 2 && o - c <= M / 2) {
                    j = c;
                    break;
                }
            if (j < 0)
                return;
            std::vector<std::int64_t> val(nblocks, -1);
            std::vector<bool> used(M, false);
            int odd_used = 0, even_used = 0;
            for (int b = 0; b < nblocks; ++b)
                if (size[b] % 2) {
                    if (odd_used < j)
                        val[b] = 2 * odd_used++ + 1;
                    else
                        val[b] = 2 * even_used++;
                    used[val[b]] = true;
                }
            std::int64_t next = 0;
            for (int b = 0; b < nblocks; ++b)
                if (val[b] < 0) {
                    while (used[next])
                        ++next;
                    val[b] = next;
                    used[next] = true;
                }
            Vec a(n);
            for (int x = 0; x < n; ++x)
                a[x] = val[rgs[x]];
            require(odd(vec_sum(a)), ErrorKind::InvalidArgument, "irrH1 partition scan: bad representative (internal)");
            record(cell, a, static_cast<std::int64_t>(act.orbit(act.canon(a)).size()));
            return;
        }
        for (int b = 0; b <= nblocks; ++b) {
            rgs[i] = b;
            rec(i + 1, std::max(nblocks, b + 1));
        }
    };
    rec(0, 0);
    return cell;
}

LemmaReport verify_orbit_lemma(OrbitLemma lemma, const LemmaParams& params)
{
    const int n = params.n;
    const int s = params.s;
    require(n >= 1 && s >= 1, ErrorKind::InvalidArgument, "verify_orbit_lemma: n and s must be positive");
    LemmaReport rep;
    rep.lemma = lemma;
    rep.n = n;
    rep.s = s;
    const bool pow2n = is_pow2(static_cast<std::uint64_t>(n));
    const int t = pow2n ? v2(static_cast<std::uint64_t>(n)) : 0;
    const auto blocks = lemma_blocks(n);

    std::vector<UnitSubgroup> gammas;
    if (params.gamma) {
        require(params.gamma->s == s, ErrorKind::InvalidArgument, "verify_orbit_lemma: gamma modulus differs from 2^s");
        gammas.push_back(*params.gamma);
    } else {
        gammas = all_unit_subgroups(s);
    }
    std::vector<int> nprimes;
    if (params.nprime)
        nprimes.push_back(*params.nprime);
    else
        nprimes = even_divisors(n);

    switch (lemma) {
    case OrbitLemma::IrrH1: {
        require(pow2n, ErrorKind::InvalidArgument, "irrH1: n must be a power of two");
        const bool big = (std::uint64_t{1} << (n * s)) > kScanLimit;
        rep.cells.push_back(big ? irrh1_partition_scan(n, s) : irrh1_exhaustive_scan(n, s));
        break;
    }
    case OrbitLemma::IrrH2: {
        require(pow2n && n >= 2 && s > 1, ErrorKind::InvalidArgument, "irrH2: needs n = 2^t >= 2 and s > 1");
        OrbitActionSpec spec{n, s, OrbitTarget::PlainVector, 0, std::nullopt};
        rep.cells.push_back(threshold_scan(spec, std::int64_t{1} << (2 * t - 1), [&](const Vec& a) {
            const std::int64_t A1 = block_sum(a, blocks[0]), A2 = block_sum(a, blocks[1]);
            return odd(A1) && mod_pow2(A1 + A2, s) == 0;
        }));
        break;
    }
    case OrbitLemma::IrrH2Prime: {
        require(pow2n && n >= 2, ErrorKind::InvalidArgument, "irrH2prime: needs n = 2^t >= 2");
        for (const auto& G : gammas) {
            OrbitActionSpec spec{n, s, OrbitTarget::GammaQuotient, 0, G};
            LemmaCell cell = threshold_scan(spec, std::int64_t{1} << (2 * t - 2), [&](const Vec& a) {
                return odd(block_sum(a, blocks[0])) && odd(block_sum(a, blocks[1]));
            });
            cell.gamma = gamma_string(G);
            rep.cells.push_back(std::move(cell));
        }
        break;
    }
    case OrbitLemma::GammaAction: {
        require(pow2n && n >= 2, ErrorKind::InvalidArgument, "gammaaction: needs n = 2^t >= 2");
        for (const auto& G : gammas) {
            LemmaCell cell;
            cell.gamma = gamma_string(G);
            cell.method = "exhaustive";
            if (contains_minus_one(G)) {
                cell.applicable = false;
                rep.cells.push_back(std::move(cell));
                continue;
            }
            const Action plain(OrbitActionSpec{n, s, OrbitTarget::PlainVector, 0, std::nullopt});
            const OrbitActionSpec qspec{n, s, OrbitTarget::GammaQuotient, 0, G};
            plain.scan([&](const std::vector<std::uint64_t>& members) {
                std::int64_t qsize = -1;
                const auto psize = static_cast<std::int64_t>(members.size());
                for (auto m : members) {
                    const Vec a = plain.decode(m);
                    const std::int64_t A1 = block_sum(a, blocks[0]), A2 = block_sum(a, blocks[1]);
                    if (!(odd(A1) && mod_pow2(A1 + A2, s) == 0))
                        continue;
                    if (qsize < 0)
                        qsize = static_cast<std::int64_t>(orbit_size(a, qspec));
                    ++cell.count_scanned;
                    if (cell.min_achieved < 0 || qsize < cell.min_achieved)
                        cell.min_achieved = qsize;
                    if (cell.bound == 0 || psize < cell.bound)
                        cell.bound = psize;
                    if (qsize != psize && cell.violations.size() <= kMaxListed)
                        cell.violations.push_back("a=" + vec_string(a) + " quotient=" + std::to_string(qsize) +
                                                  " plain=" + std::to_string(psize));
                }
            });
            rep.cells.push_back(std::move(cell));
        }
        break;
    }
    case OrbitLemma::Irr: {
        require(blocks.size() >= 2, ErrorKind::InvalidArgument, "irr: needs m >= 2");
        auto kj = [&](std::size_t j) { return v2(blocks[j].size()); };
        for (const auto& G : gammas) {
            const bool twist_in = s >= 2 && contains_half_twist(G);
            OrbitActionSpec spec{n, s, OrbitTarget::SignTwisted, 0, G};
            for (std::size_t j1 = 0; j1 < blocks.size(); ++j1)
                for (std::size_t j2 = j1 + 1; j2 < blocks.size(); ++j2) {
                    const int e = (twist_in ? 1 : 2) + kj(j1) + kj(j2);
                    LemmaCell cell = threshold_scan(spec, std::int64_t{1} << e, [&](const Vec& a) {
                        return odd(block_sum(a, blocks[j1])) && odd(block_sum(a, blocks[j2]));
                    });
                    cell.gamma = gamma_string(G);
                    cell.j1 = static_cast<int>(j1) + 1;
                    cell.j2 = static_cast<int>(j2) + 1;
                    rep.cells.push_back(std::move(cell));
                }
        }
        break;
    }
    case OrbitLemma::IrrHPSLn3: {
        require(pow2n && t > 1, ErrorKind::InvalidArgument, "irrHPSLn3: needs n = 2^t with t > 1");
        for (int np : nprimes) {
            require(np >= 1 && n % np == 0 && np % 2 == 0, ErrorKind::InvalidArgument,
                    "irrHPSLn3: n' must be an even divisor of n");
            const int v = v_of(np, s);
            OrbitActionSpec spec{n, s, OrbitTarget::DiagonalQuotient, np, std::nullopt};
            LemmaCell cell = threshold_scan(spec, std::int64_t{1} << (v == 1 ? 2 * t - 2 : 2 * t - 1), [&](const Vec& a) {
                return mod_pow2(vec_sum(a), v) == 0 && odd(block_sum(a, blocks[0]));
            });
            cell.nprime = np;
            rep.cells.push_back(std::move(cell));
        }
        break;
    }
    case OrbitLemma::IrrHPSLn1: {
        require(!pow2n, ErrorKind::InvalidArgument, "irrHPSLn1: n must not be a power of two");
        for (int np : nprimes) {
            require(np >= 1 && n % np == 0, ErrorKind::InvalidArgument, "irrHPSLn1: n' must divide n");
            const int v = v_of(np, s);
            OrbitActionSpec spec{n, s, OrbitTarget::DiagonalQuotient, np, std::nullopt};
            for (std::size_t j = 0; j < blocks.size(); ++j) {
                if (params.j1 && *params.j1 != static_cast<int>(j) + 1)
                    continue;
                const int e = v2(blocks[j].size()) + v2(static_cast<std::uint64_t>(n));
                LemmaCell cell = threshold_scan(spec, std::int64_t{1} << e, [&](const Vec& a) {
                    return mod_pow2(vec_sum(a), v) == 0 && odd(block_sum(a, blocks[j]));
                });
                cell.nprime = np;
                cell.j1 = static_cast<int>(j) + 1;
                rep.cells.push_back(std::move(cell));
            }
        }
        break;
    }
    }

    for (const auto& c : rep.cells) {
        if (!c.applicable)
            continue;
        rep.count_scanned += c.count_scanned;
        if (c.min_achieved >= 0 && (rep.min_achieved < 0 || c.min_achieved < rep.min_achieved))
            rep.min_achieved = c.min_achieved;
        if (c.count_scanned && (rep.bound == 0 || c.bound < rep.bound))
            rep.bound = c.bound;
        for (const auto& v : c.violations) {
            std::string tag;
            if (!c.gamma.empty())
                tag += " gamma=" + c.gamma;
            if (c.nprime)
                tag += " nprime=" + std::to_string(c.nprime);
            if (c.j1)
                tag += " j1=" + std::to_string(c.j1);
            if (c.j2)
                tag += " j2=" + std::to_string(c.j2);
            rep.violations.push_back(v + tag);
        }
    }
    return rep;
}

std::string LemmaReport::to_json() const
{
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["lemma"] = orbit_lemma_name(lemma);
    j["n"] = n;
    j["s"] = s;
    j["min_achieved"] = min_achieved;
    j["bound"] = bound;
    j["count_scanned"] = count_scanned;
    j["violations"] = violations;
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (const auto& c : cells) {
        nlohmann::ordered_json x;
        if (!c.gamma.empty())
            x["gamma"] = c.gamma;
        if (c.nprime)
            x["nprime"] = c.nprime;
        if (c.j1)
            x["j1"] = c.j1;
        if (c.j2)
            x["j2"] = c.j2;
        x["applicable"] = c.applicable;
        x["method"] = c.method;
        x["min_achieved"] = c.min_achieved;
        x["bound"] = c.bound;
        x["count_scanned"] = c.count_scanned;
        x["violations"] = c.violations.size();
        cs.push_back(std::move(x));
    }
    j["cells"] = cs;
    return j.dump();
}

}  // namespace ed2
