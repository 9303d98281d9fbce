#pragma once

/**
 * @file prime_field.hpp
 * @brief Exact arithmetic in Z/pZ for small primes.
 *
 * A Prime owns precomputed factorial and inverse-factorial tables up to p-1,
 * which back the binomial coefficients used throughout the coefficient
 * formulas. Prime values are cheap to copy (the tables are shared).
 */

#include <rsumset/error.hpp>

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <vector>

namespace rsumset {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// Deterministic trial division.
bool is_prime(u64 n) noexcept;

class Prime {
public:
    // Largest modulus accepted; the factorial tables are O(p).
    static constexpr u32 kMax = 1u << 20;

    explicit Prime(u64 value);

    u32 value() const noexcept { return value_; }
    operator u32() const noexcept { return value_; }

    // n! mod p, for n < p.
    u32 factorial(u32 n) const;
    u32 inverse_factorial(u32 n) const;

    friend bool operator==(const Prime& a, const Prime& b) noexcept { return a.value_ == b.value_; }

private:
    struct Tables {
        std::vector<u32> fact;
        std::vector<u32> inv_fact;
    };

    u32 value_;
    std::shared_ptr<const Tables> tables_;
};

// Raw residue helpers; operands must already be reduced.
inline u32 add_mod(u32 a, u32 b, u32 p) noexcept {
    u32 s = a + b;
    return s >= p ? s - p : s;
}
inline u32 sub_mod(u32 a, u32 b, u32 p) noexcept { return a >= b ? a - b : a + p - b; }
inline u32 neg_mod(u32 a, u32 p) noexcept { return a == 0 ? 0 : p - a; }
inline u32 mul_mod(u32 a, u32 b, u32 p) noexcept {
    return static_cast<u32>(static_cast<u64>(a) * b % p);
}
inline u32 reduce(i64 x, u32 p) noexcept {
    i64 r = x % static_cast<i64>(p);
    return static_cast<u32>(r < 0 ? r + p : r);
}

// Extended Euclid; throws ZeroInverse for a == 0 (mod p).
u32 inverse_mod(u32 a, u32 p);
u32 pow_mod(u32 a, u64 e, u32 p) noexcept;

class FieldElement {
public:
    FieldElement(i64 value, Prime modulus) : residue_(reduce(value, modulus.value())), modulus_(std::move(modulus)) {}

    u32 residue() const noexcept { return residue_; }
    const Prime& modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return residue_ == 0; }

    FieldElement inverse() const;
    FieldElement pow(u64 e) const;

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

    // Equality requires equal moduli; elements of different fields never compare equal.
    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.modulus_ == b.modulus_ && a.residue_ == b.residue_;
    }

    friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.residue_; }

private:
    u32 residue_;
    Prime modulus_;
};

FieldElement inverse(const FieldElement& a);

// C(n, r) mod p. Returns 0 for r > n; throws ModulusTooSmall when n >= p.
FieldElement binomial_mod(u64 n, u64 r, const Prime& p);

} // namespace rsumset
