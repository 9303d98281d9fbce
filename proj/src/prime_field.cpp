#include <rsumset/prime_field.hpp>

#include <string>

namespace rsumset {

bool is_prime(u64 n) noexcept {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Prime::Prime(u64 value) {
    if (value >= kMax)
        throw Error(ErrorCode::NotPrime, "modulus " + std::to_string(value) + " exceeds supported range");
    if (!is_prime(value))
        throw Error(ErrorCode::NotPrime, std::to_string(value) + " is not prime");
    value_ = static_cast<u32>(value);

    auto t = std::make_shared<Tables>();
    t->fact.resize(value_);
    t->inv_fact.resize(value_);
    t->fact[0] = 1 % value_;
    for (u32 i = 1; i < value_; ++i) t->fact[i] = mul_mod(t->fact[i - 1], i, value_);
    t->inv_fact[value_ - 1] = inverse_mod(t->fact[value_ - 1], value_);
    for (u32 i = value_ - 1; i > 0; --i) t->inv_fact[i - 1] = mul_mod(t->inv_fact[i], i, value_);
    tables_ = std::move(t);
}

u32 Prime::factorial(u32 n) const {
    if (n >= value_)
        throw Error(ErrorCode::ModulusTooSmall, std::to_string(n) + "! vanishes mod " + std::to_string(value_));
    return tables_->fact[n];
}

u32 Prime::inverse_factorial(u32 n) const {
    if (n >= value_)
        throw Error(ErrorCode::ModulusTooSmall, std::to_string(n) + "! is not invertible mod " + std::to_string(value_));
    return tables_->inv_fact[n];
}

u32 inverse_mod(u32 a, u32 p) {
    a %= p;
    if (a == 0) throw Error(ErrorCode::ZeroInverse, "0 has no inverse mod " + std::to_string(p));
    i64 r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        i64 r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        i64 s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
    }
    return reduce(s0, p);
}

u32 pow_mod(u32 a, u64 e, u32 p) noexcept {
    u32 result = 1 % p;
    u32 base = a % p;
    while (e > 0) {
        if (e & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    return result;
}

namespace {

void require_same(const FieldElement& a, const FieldElement& b) {
    if (!(a.modulus() == b.modulus()))
        throw Error(ErrorCode::ModulusMismatch, "mod " + std::to_string(a.modulus().value()) + " vs mod " +
                                                    std::to_string(b.modulus().value()));
}

} // namespace

FieldElement FieldElement::inverse() const { return FieldElement(inverse_mod(residue_, modulus_), modulus_); }

FieldElement FieldElement::pow(u64 e) const { return FieldElement(pow_mod(residue_, e, modulus_), modulus_); }

FieldElement FieldElement::operator-() const { return FieldElement(neg_mod(residue_, modulus_), modulus_); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return FieldElement(add_mod(a.residue_, b.residue_, a.modulus_), a.modulus_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return FieldElement(sub_mod(a.residue_, b.residue_, a.modulus_), a.modulus_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return FieldElement(mul_mod(a.residue_, b.residue_, a.modulus_), a.modulus_);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return a * b.inverse();
}

FieldElement inverse(const FieldElement& a) { return a.inverse(); }

FieldElement binomial_mod(u64 n, u64 r, const Prime& p) {
    if (n >= p.value())
        throw Error(ErrorCode::ModulusTooSmall,
                    "binomial(" + std::to_string(n) + ", .) needs n < p = " + std::to_string(p.value()));
    if (r > n) return FieldElement(0, p);
    const auto nn = static_cast<u32>(n), rr = static_cast<u32>(r);
    u32 v = mul_mod(p.factorial(nn), mul_mod(p.inverse_factorial(rr), p.inverse_factorial(nn - rr), p), p);
    return FieldElement(v, p);
}

} // namespace rsumset
