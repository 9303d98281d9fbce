#pragma once

// Exact-integer versions of the coefficient formulas used by the proof
// audit. Values are arbitrary precision so they can be compared as integers
// (or rationals) before any reduction mod p.

#include <rsumset/prime_field.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace rsumset {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt binomial_exact(u64 n, i64 r);

// C(i-1, j-1) - C(i-1, j), with C_{i,i} = 1 and C_{i,0} = -1.
BigInt cij_exact(u32 i, i64 j);

// ((2j - i) / j) * C(i-1, j-1), for 1 <= j <= i-1.
BigRational cij_ratio_form(u32 i, i64 j);

// Even step i = 2r: B_{k-1,r-1} + B_{k-1,r} = C_{2k-1,k-r} + C_{2k-1,k-r-1}.
BigInt even_denominator_direct(u32 k, u32 r);
// -2r(2k-1)(2k-2)! / ((k+r)!(k-r)!)
BigRational even_denominator_closed_form(u32 k, u32 r);

// Odd step i = 2r+1: B_{k-1,r} = C_{2k-1,k-r-1}.
BigInt odd_pivot_direct(u32 k, u32 r);
// -i/(k-r-1) * C(2k-2, k+r-1). Disagrees with the direct value
// (e.g. k=5, r=0 gives -35/2 against -14); kept for side-by-side reporting.
BigRational odd_pivot_closed_form(u32 k, u32 r);

// Reduction of an exact rational mod p; nullopt when the denominator vanishes.
std::optional<u32> reduce_rational(const BigRational& q, u32 p);
u32 reduce_integer(const BigInt& v, u32 p);

std::string to_string(const BigRational& q);

} // namespace rsumset
