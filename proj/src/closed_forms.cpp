#include <rsumset/closed_forms.hpp>

namespace rsumset {

namespace {

BigInt factorial_exact(u64 n) {
    BigInt f = 1;
    for (u64 t = 2; t <= n; ++t) f *= t;
    return f;
}

} // namespace

BigInt binomial_exact(u64 n, i64 r) {
    if (r < 0 || static_cast<u64>(r) > n) return 0;
    u64 rr = static_cast<u64>(r);
    if (rr > n - rr) rr = n - rr;
    BigInt c = 1;
    for (u64 t = 1; t <= rr; ++t) c = c * (n - rr + t) / t;
    return c;
}

BigInt cij_exact(u32 i, i64 j) {
    if (i == 0 || j < 0 || j > static_cast<i64>(i))
        throw Error(ErrorCode::IndexOutOfRange, "C_{" + std::to_string(i) + "," + std::to_string(j) + "}");
    if (j == static_cast<i64>(i)) return 1;
    if (j == 0) return -1;
    return binomial_exact(i - 1, j - 1) - binomial_exact(i - 1, j);
}

BigRational cij_ratio_form(u32 i, i64 j) {
    if (j < 1 || j > static_cast<i64>(i) - 1)
        throw Error(ErrorCode::IndexOutOfRange, "ratio form needs 1 <= j <= i-1");
    return BigRational(BigInt(2 * j - static_cast<i64>(i)), BigInt(j)) * BigRational(binomial_exact(i - 1, j - 1));
}

BigInt even_denominator_direct(u32 k, u32 r) {
    return cij_exact(2 * k - 1, static_cast<i64>(k) - r) + cij_exact(2 * k - 1, static_cast<i64>(k) - r - 1);
}

BigRational even_denominator_closed_form(u32 k, u32 r) {
    BigInt num = BigInt(-2) * r * (2 * k - 1) * factorial_exact(2 * k - 2);
    BigInt den = factorial_exact(k + r) * factorial_exact(k - r);
    return BigRational(num, den);
}

BigInt odd_pivot_direct(u32 k, u32 r) { return cij_exact(2 * k - 1, static_cast<i64>(k) - r - 1); }

BigRational odd_pivot_closed_form(u32 k, u32 r) {
    const i64 i = 2 * static_cast<i64>(r) + 1;
    const i64 den = static_cast<i64>(k) - static_cast<i64>(r) - 1;
    if (den == 0) throw Error(ErrorCode::IndexOutOfRange, "k - r - 1 = 0");
    return BigRational(BigInt(-i), BigInt(den)) * BigRational(binomial_exact(2 * k - 2, k + r - 1));
}

u32 reduce_integer(const BigInt& v, u32 p) {
    BigInt r = v % p;
    if (r < 0) r += p;
    return static_cast<u32>(r);
}

std::optional<u32> reduce_rational(const BigRational& q, u32 p) {
    const u32 den = reduce_integer(boost::multiprecision::denominator(q), p);
    if (den == 0) return std::nullopt;
    return mul_mod(reduce_integer(boost::multiprecision::numerator(q), p), inverse_mod(den, p), p);
}

std::string to_string(const BigRational& q) {
    const BigInt& den = boost::multiprecision::denominator(q);
    if (den == 1) return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

} // namespace rsumset
