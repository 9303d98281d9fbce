#pragma once

/**
 * @file nullstellensatz.hpp
 * @brief Two-variable Combinatorial Nullstellensatz witnesses.
 *
 * For f vanishing on Sx x Sy, cn_decompose produces h_A, h_B with
 *
 *     f = h_A(x, y) * g_A(x) + h_B(x, y) * g_B(y),
 *
 * where g_A, g_B are the vanishing polynomials of the two grids and
 * deg h_A <= deg f - |Sx|, deg h_B <= deg f - |Sy|. Reduction runs by g_A
 * first and then by g_B, so every monomial of h_B has x-exponent < |Sx|.
 */

#include <rsumset/fpset.hpp>
#include <rsumset/polynomial.hpp>

#include <optional>
#include <string>
#include <utility>

namespace rsumset {

struct CnWitness {
    BiPoly h_a;
    BiPoly h_b;
    UniPoly g_a;
    UniPoly g_b;
    int degree_bound_a;
    int degree_bound_b;
};

// First grid point (in lexicographic order) where f does not vanish.
std::optional<std::pair<u32, u32>> find_nonvanishing_point(const BiPoly& f, const FpSet& sx, const FpSet& sy);

bool vanishes_on_grid(const BiPoly& f, const FpSet& sx, const FpSet& sy);

// Throws NotVanishing when the reduction leaves a nonzero remainder.
CnWitness cn_decompose(const BiPoly& f, const FpSet& sx, const FpSet& sy);

struct WitnessVerdict {
    bool ok = false;
    std::string diagnostic; // empty when ok

    explicit operator bool() const noexcept { return ok; }
};

WitnessVerdict verify_witness(const BiPoly& f, const CnWitness& w);

} // namespace rsumset
