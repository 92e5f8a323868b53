#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ed2 {

// Element of Z[zeta_m], m a power of two, in the power basis 1, z, ..., z^{m/2-1} with z^{m/2} = -1.
class CycInt {
public:
    CycInt() : CycInt(2) {}
    explicit CycInt(std::uint32_t m);
    CycInt(std::uint32_t m, std::int64_t value);
    CycInt(std::uint32_t m, std::vector<std::int64_t> coeffs);

    static CycInt root_power(std::uint32_t m, std::int64_t k);

    std::uint32_t modulus() const { return m_; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_integer() const;
    std::int64_t integer_value() const;

    CycInt lifted(std::uint32_t m2) const;
    CycInt reduced() const;
    CycInt galois(std::int64_t u) const;
    CycInt conj() const { return galois(-1); }

    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    CycInt& operator*=(std::int64_t k);
    CycInt operator-() const;
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(CycInt a, std::int64_t k) { return a *= k; }
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    friend bool operator==(const CycInt& a, const CycInt& b);

    bool divisible_by(std::int64_t d) const;
    CycInt divided_exact(std::int64_t d) const;
    std::int64_t content() const;
    std::int64_t norm() const;

    // value mod p with z a primitive m-th root of unity mod p
    std::uint64_t reduce_mod(std::uint64_t p, std::uint64_t z) const;

    std::string to_string() const;

private:
    std::uint32_t m_;
    std::vector<std::int64_t> c_;
};

std::uint32_t common_modulus(std::uint32_t a, std::uint32_t b);

// Element of Q(zeta_m): numerator / den with den > 0 and gcd(content(num), den) = 1.
class CycRat {
public:
    CycRat() = default;
    CycRat(CycInt num, std::int64_t den = 1);
    static CycRat from_int(std::uint32_t m, std::int64_t v) { return CycRat(CycInt(m, v)); }

    const CycInt& num() const { return num_; }
    std::int64_t den() const { return den_; }
    std::uint32_t modulus() const { return num_.modulus(); }
    bool is_zero() const { return num_.is_zero(); }

    CycRat inverse() const;
    CycRat galois(std::int64_t u) const { return CycRat(num_.galois(u), den_); }
    CycRat lifted(std::uint32_t m2) const { return CycRat(num_.lifted(m2), den_); }

    friend CycRat operator+(const CycRat& a, const CycRat& b);
    friend CycRat operator-(const CycRat& a, const CycRat& b);
    friend CycRat operator*(const CycRat& a, const CycRat& b);
    CycRat operator-() const { return CycRat(-num_, den_); }
    friend bool operator==(const CycRat& a, const CycRat& b);

    std::string to_string() const;

private:
    void normalize();
    CycInt num_{2, 0};
    std::int64_t den_ = 1;
};

}  // namespace ed2
