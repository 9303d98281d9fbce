#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate and bivariate polynomials over Z/pZ.
 *
 * Degrees in this problem stay small (at most 2k-1 for sets of size k), so
 * both types store full coefficient tables and expose direct monomial access.
 */

#include <rsumset/fpset.hpp>
#include <rsumset/prime_field.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace rsumset {

// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = -1;

class UniPoly {
public:
    explicit UniPoly(Prime modulus) : modulus_(std::move(modulus)) {}
    // coeffs[i] is the coefficient of z^i; values are reduced mod p.
    UniPoly(Prime modulus, std::vector<i64> coeffs);

    const Prime& modulus() const noexcept { return modulus_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    u32 coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    const std::vector<u32>& coeffs() const noexcept { return coeffs_; }
    u32 evaluate(u32 z) const noexcept;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) noexcept {
        return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
    }

private:
    void trim() noexcept;

    Prime modulus_;
    std::vector<u32> coeffs_;
};

class BiPoly {
public:
    explicit BiPoly(Prime modulus) : modulus_(std::move(modulus)) {}

    static BiPoly monomial(const Prime& p, std::size_t i, std::size_t j, i64 c);
    static BiPoly in_x(const UniPoly& q);
    static BiPoly in_y(const UniPoly& q);

    const Prime& modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return nx_ == 0; }

    // Coefficient of x^i y^j (0 outside the stored table).
    u32 coeff(std::size_t i, std::size_t j) const noexcept {
        return i < nx_ && j < ny_ ? data_[i * ny_ + j] : 0;
    }
    void set(std::size_t i, std::size_t j, i64 value);
    void add_to(std::size_t i, std::size_t j, u32 value);

    int x_degree() const noexcept { return static_cast<int>(nx_) - 1; }
    int y_degree() const noexcept { return static_cast<int>(ny_) - 1; }
    int total_degree() const noexcept;

    u32 evaluate(u32 x, u32 y) const noexcept;

    // Part of total degree d.
    BiPoly homogeneous_component(int d) const;

    BiPoly scaled(u32 c) const;

    struct Term {
        std::size_t i, j;
        u32 c;
    };
    // Nonzero terms sorted by (total degree, x-exponent).
    std::vector<Term> terms() const;

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly& a, const BiPoly& b) noexcept {
        return a.modulus_ == b.modulus_ && a.nx_ == b.nx_ && a.ny_ == b.ny_ && a.data_ == b.data_;
    }

private:
    void resize(std::size_t nx, std::size_t ny);
    void trim();

    Prime modulus_;
    std::size_t nx_ = 0, ny_ = 0;
    std::vector<u32> data_; // row-major in the x-exponent
};

// One "c:i,j" triplet per line, sorted by (total degree, i).
std::string to_text(const BiPoly& f);
// Inverse of to_text. Blank lines and '#' comments are skipped; repeated
// monomials accumulate. Throws ParseError.
BiPoly parse_bipoly_text(std::string_view text, const Prime& p);

struct SymmetricProfile {
    Prime modulus;
    std::vector<u32> values; // sigma_0 .. sigma_m

    u32 sigma(std::size_t i) const noexcept { return i < values.size() ? values[i] : 0; }
    std::size_t degree() const noexcept { return values.size() - 1; }
};

SymmetricProfile elementary_symmetric(const FpSet& s);

// prod_{s in S} (z - s). Throws EmptySet.
UniPoly vanishing_polynomial(const FpSet& s);

// (x - y) * prod_{c in C} (x + y - c)
BiPoly build_locus_poly(const FpSet& c);

// Index d holds the degree-d component; empty for the zero polynomial.
std::vector<BiPoly> homogeneous_components(const BiPoly& f);

// Coefficient of x^j y^(i-j) in (x - y)(x + y)^(i-1), from the
// binomial-difference formula. Needs 1 <= i <= p and 0 <= j <= i.
FieldElement cij(u32 i, i64 j, const Prime& p);

// (x - y)(x + y)^(i-1) by direct multiplication.
BiPoly pi_poly(u32 i, const Prime& p);

enum class SizeCheck { strict, lenient };

// sum_i (-1)^i sigma_i(C) p_{|C|+1-i}. Strict mode rejects odd |C| with OddSize.
BiPoly sigma_expansion(const FpSet& c, SizeCheck check = SizeCheck::strict);

// Roots by evaluation at every residue; multiplicities are discarded.
FpSet roots_over_fp(const UniPoly& q);

// deg(q) distinct roots in F_p.
bool splits_with_distinct_roots(const UniPoly& q);

} // namespace rsumset
