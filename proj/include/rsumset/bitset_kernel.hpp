#pragma once

// Word-sized set kernels for p <= 64: bit r of a mask is residue r.

#include <bit>
#include <cstdint>

namespace rsumset::kernel {

using Mask = std::uint64_t;

constexpr Mask full_mask(unsigned p) noexcept { return p >= 64 ? ~Mask{0} : (Mask{1} << p) - 1; }

// {x + a : x in m}
constexpr Mask translate(Mask m, unsigned a, unsigned p) noexcept {
    if (a == 0) return m;
    return ((m << a) | (m >> (p - a))) & full_mask(p);
}

constexpr Mask sumset(Mask a, Mask b, unsigned p) noexcept {
    Mask acc = 0;
    for (Mask rest = a; rest; rest &= rest - 1) acc |= translate(b, static_cast<unsigned>(std::countr_zero(rest)), p);
    return acc;
}

constexpr Mask restricted_sumset(Mask a, Mask b, unsigned p) noexcept {
    Mask acc = 0;
    for (Mask rest = a; rest; rest &= rest - 1) {
        const auto x = static_cast<unsigned>(std::countr_zero(rest));
        acc |= translate(b & ~(Mask{1} << x), x, p);
    }
    return acc;
}

// |A restricted+ B|, abandoning once it exceeds `cap` (returns cap + 1 then).
inline unsigned restricted_size_capped(Mask a, Mask b, unsigned p, unsigned cap) noexcept {
    Mask acc = 0;
    for (Mask rest = a; rest; rest &= rest - 1) {
        const auto x = static_cast<unsigned>(std::countr_zero(rest));
        acc |= translate(b & ~(Mask{1} << x), x, p);
        if (static_cast<unsigned>(std::popcount(acc)) > cap) return cap + 1;
    }
    return static_cast<unsigned>(std::popcount(acc));
}

inline Mask affine(Mask m, unsigned lambda, unsigned mu, unsigned p) noexcept {
    Mask out = 0;
    for (Mask rest = m; rest; rest &= rest - 1) {
        const auto x = static_cast<std::uint64_t>(std::countr_zero(rest));
        out |= Mask{1} << ((lambda * x + mu) % p);
    }
    return out;
}

// Lexicographic order of the sorted element sequences, for equal-size sets:
// the smaller set owns the lowest residue where they differ.
constexpr bool lex_less(Mask a, Mask b) noexcept {
    const Mask diff = a ^ b;
    return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

} // namespace rsumset::kernel
