#include "ed2/cycint.hpp"

#include "ed2/error.hpp"
#include "ed2/numtheory.hpp"

#include <numeric>
#include <sstream>

namespace ed2 {

namespace {

std::uint32_t normalize_modulus(std::uint32_t m)
{
    require(is_pow2(m), ErrorKind::InvalidArgument, "CycInt: modulus must be a power of two");
    return m < 2 ? 2 : m;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

}  // namespace

std::uint32_t common_modulus(std::uint32_t a, std::uint32_t b) { return std::max(normalize_modulus(a), normalize_modulus(b)); }

CycInt::CycInt(std::uint32_t m) : m_(normalize_modulus(m)), c_(m_ / 2, 0) {}

CycInt::CycInt(std::uint32_t m, std::int64_t value) : CycInt(m) { c_[0] = value; }

CycInt::CycInt(std::uint32_t m, std::vector<std::int64_t> coeffs) : CycInt(m)
{
    const std::size_t d = c_.size();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        const std::size_t r = j % (2 * d);
        if (r < d)
            c_[r] += coeffs[j];
        else
            c_[r - d] -= coeffs[j];
    }
}

CycInt CycInt::root_power(std::uint32_t m, std::int64_t k)
{
    CycInt x(m);
    const std::int64_t mm = x.m_;
    std::int64_t r = ((k % mm) + mm) % mm;
    const std::int64_t d = mm / 2;
    if (r < d)
        x.c_[r] = 1;
    else
        x.c_[r - d] = -1;
    return x;
}

bool CycInt::is_zero() const
{
    for (auto v : c_)
        if (v != 0)
            return false;
    return true;
}

bool CycInt::is_integer() const
{
    for (std::size_t j = 1; j < c_.size(); ++j)
        if (c_[j] != 0)
            return false;
    return true;
}

std::int64_t CycInt::integer_value() const
{
    require(is_integer(), ErrorKind::InvalidArgument, "CycInt: value is not a rational integer");
    return c_[0];
}

CycInt CycInt::lifted(std::uint32_t m2) const
{
    m2 = normalize_modulus(m2);
    require(m2 >= m_, ErrorKind::InvalidArgument, "CycInt: cannot lift to a smaller modulus");
    if (m2 == m_)
        return *this;
    CycInt r(m2);
    const std::size_t step = m2 / m_;
    for (std::size_t j = 0; j < c_.size(); ++j)
        r.c_[j * step] = c_[j];
    return r;
}

CycInt CycInt::reduced() const
{
    CycInt cur = *this;
    while (cur.m_ > 2) {
        bool ok = true;
        for (std::size_t j = 1; j < cur.c_.size(); j += 2)
            if (cur.c_[j] != 0) {
                ok = false;
                break;
            }
        if (!ok)
            break;
        CycInt nx(cur.m_ / 2);
        for (std::size_t j = 0; j < nx.c_.size(); ++j)
            nx.c_[j] = cur.c_[2 * j];
        cur = std::move(nx);
    }
    return cur;
}

CycInt CycInt::galois(std::int64_t u) const
{
    const std::int64_t mm = m_;
    std::int64_t uu = ((u % mm) + mm) % mm;
    require(uu % 2 == 1, ErrorKind::InvalidArgument, "CycInt: Galois action needs an odd unit");
    CycInt r(m_);
    const std::int64_t d = mm / 2;
    for (std::int64_t j = 0; j < d; ++j) {
        if (c_[j] == 0)
            continue;
        const std::int64_t k = (j * uu) % mm;
        if (k < d)
            r.c_[k] += c_[j];
        else
            r.c_[k - d] -= c_[j];
    }
    return r;
}

CycInt& CycInt::operator+=(const CycInt& o)
{
    if (o.m_ > m_)
        *this = lifted(o.m_);
    if (o.m_ == m_) {
        for (std::size_t j = 0; j < c_.size(); ++j)
            c_[j] += o.c_[j];
    } else {
        const std::size_t step = m_ / o.m_;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            c_[j * step] += o.c_[j];
    }
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) { return *this += -o; }

CycInt& CycInt::operator*=(std::int64_t k)
{
    for (auto& v : c_)
        v *= k;
    return *this;
}

CycInt CycInt::operator-() const
{
    CycInt r = *this;
    for (auto& v : r.c_)
        v = -v;
    return r;
}

CycInt operator*(const CycInt& a0, const CycInt& b0)
{
    const std::uint32_t m = std::max(a0.m_, b0.m_);
    const CycInt a = a0.lifted(m);
    const CycInt b = b0.lifted(m);
    CycInt r(m);
    const std::size_t d = r.c_.size();
    for (std::size_t i = 0; i < d; ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (b.c_[j] == 0)
                continue;
            const std::size_t k = i + j;
            if (k < d)
                r.c_[k] += a.c_[i] * b.c_[j];
            else
                r.c_[k - d] -= a.c_[i] * b.c_[j];
        }
    }
    return r;
}

bool operator==(const CycInt& a, const CycInt& b)
{
    if (a.m_ == b.m_)
        return a.c_ == b.c_;
    const std::uint32_t m = std::max(a.m_, b.m_);
    return a.lifted(m).c_ == b.lifted(m).c_;
}

std::int64_t CycInt::content() const
{
    std::int64_t g = 0;
    for (auto v : c_)
        g = std::gcd(g, v);
    return g;
}

bool CycInt::divisible_by(std::int64_t d) const
{
    for (auto v : c_)
        if (v % d != 0)
            return false;
    return true;
}

CycInt CycInt::divided_exact(std::int64_t d) const
{
    require(d != 0 && divisible_by(d), ErrorKind::InvalidArgument, "CycInt: inexact division");
    CycInt r = *this;
    for (auto& v : r.c_)
        v /= d;
    return r;
}

std::int64_t CycInt::norm() const
{
    CycInt acc(m_, 1);
    for (std::int64_t u = 1; u < static_cast<std::int64_t>(m_); u += 2)
        acc = acc * galois(u);
    return acc.integer_value();
}

std::uint64_t CycInt::reduce_mod(std::uint64_t p, std::uint64_t z) const
{
    std::uint64_t acc = 0;
    std::uint64_t zp = 1;
    for (auto v : c_) {
        const std::int64_t vm = v % static_cast<std::int64_t>(p);
        const std::uint64_t vv = static_cast<std::uint64_t>(vm < 0 ? vm + static_cast<std::int64_t>(p) : vm);
        acc = (acc + mulmod(vv, zp, p)) % p;
        zp = mulmod(zp, z, p);
    }
    return acc;
}

std::string CycInt::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (j)
            os << ',';
        os << c_[j];
    }
    os << "]@zeta" << m_;
    return os.str();
}

CycRat::CycRat(CycInt num, std::int64_t den) : num_(std::move(num)), den_(den)
{
    require(den != 0, ErrorKind::InvalidArgument, "CycRat: zero denominator");
    normalize();
}

void CycRat::normalize()
{
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    const std::int64_t g = std::gcd(num_.content(), den_);
    if (g > 1) {
        num_ = num_.divided_exact(g);
        den_ /= g;
    }
}

CycRat CycRat::inverse() const
{
    require(!num_.is_zero(), ErrorKind::InvalidArgument, "CycRat: inverse of zero");
    const std::uint32_t m = num_.modulus();
    CycInt others(m, 1);
    for (std::int64_t u = 3; u < static_cast<std::int64_t>(m); u += 2)
        others = others * num_.galois(u);
    const CycInt full = others * num_;
    const std::int64_t nrm = full.integer_value();
    return CycRat(others * den_, nrm);
}

CycRat operator+(const CycRat& a, const CycRat& b)
{
    const std::int64_t l = std::lcm(a.den_, b.den_);
    return CycRat(a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l);
}

CycRat operator-(const CycRat& a, const CycRat& b) { return a + (-b); }

CycRat operator*(const CycRat& a, const CycRat& b) { return CycRat(a.num_ * b.num_, a.den_ * b.den_); }

bool operator==(const CycRat& a, const CycRat& b) { return a.den_ == b.den_ && a.num_ == b.num_; }

std::string CycRat::to_string() const
{
    if (den_ == 1)
        return num_.to_string();
    return num_.to_string() + "/" + std::to_string(den_);
}

}  // namespace ed2
