#include <rsumset/prime_field.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace rsumset;

TEST(Prime, RejectsComposites) {
    for (u64 n : {0, 1, 4, 9, 15, 91, 561}) {
        try {
            Prime p(n);
            FAIL() << n << " accepted";
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::NotPrime);
        }
    }
    EXPECT_NO_THROW(Prime(2));
    EXPECT_NO_THROW(Prime(9973));
}

TEST(Prime, TrialDivisionMatchesSieve) {
    constexpr unsigned n = 10000;
    std::vector<bool> composite(n, false);
    for (unsigned i = 2; i * i < n; ++i)
        if (!composite[i])
            for (unsigned j = i * i; j < n; j += i) composite[j] = true;
    for (unsigned i = 2; i < n; ++i) EXPECT_EQ(is_prime(i), !composite[i]) << i;
}

TEST(FieldElement, InverseExamples) {
    const Prime p11(11);
    EXPECT_EQ(inverse(FieldElement(3, p11)).residue(), 4u);
    EXPECT_EQ(inverse(FieldElement(10, p11)).residue(), 10u);
    for (u64 q : {2, 3, 5, 7, 101}) EXPECT_EQ(inverse(FieldElement(1, Prime(q))).residue(), 1u);
}

TEST(FieldElement, ZeroHasNoInverse) {
    const Prime p(7);
    try {
        (void)FieldElement(14, p).inverse();
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroInverse);
    }
}

TEST(FieldElement, EuclidAgreesWithFermat) {
    for (u64 q : {2, 3, 13, 101, 9973}) {
        const Prime p(q);
        for (u32 a = 1; a < std::min<u32>(p.value(), 500); ++a) {
            const FieldElement x(a, p);
            EXPECT_EQ(x.inverse(), x.pow(q - 2));
            EXPECT_EQ((x * x.inverse()).residue(), 1u);
        }
    }
}

TEST(FieldElement, ReducesNegativeInput) {
    const Prime p(11);
    EXPECT_EQ(FieldElement(-1, p).residue(), 10u);
    EXPECT_EQ(FieldElement(-23, p).residue(), 10u);
    EXPECT_EQ(FieldElement(22, p).residue(), 0u);
}

TEST(FieldElement, MixedModuliRejected) {
    const FieldElement a(1, Prime(7)), b(1, Prime(11));
    try {
        (void)(a + b);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ModulusMismatch);
    }
    EXPECT_THROW((void)(a * b), Error);
    EXPECT_FALSE(a == b);
}

TEST(FieldElement, RingLawsExhaustiveSmallPrimes) {
    for (u64 q : {2, 3, 5, 7, 11, 13}) {
        const Prime p(q);
        for (u32 x = 0; x < q; ++x)
            for (u32 y = 0; y < q; ++y) {
                const FieldElement a(x, p), b(y, p);
                EXPECT_EQ(a + b, b + a);
                EXPECT_EQ(a * b, b * a);
                EXPECT_EQ((a - b) + b, a);
                for (u32 z = 0; z < q; ++z) {
                    const FieldElement c(z, p);
                    EXPECT_EQ((a + b) + c, a + (b + c));
                    EXPECT_EQ((a * b) * c, a * (b * c));
                    EXPECT_EQ(a * (b + c), a * b + a * c);
                }
            }
    }
}

TEST(Binomial, Examples) {
    const Prime p11(11), p7(7);
    EXPECT_EQ(oracle::mod(oracle::pascal(8)[8][4], 11), 4); // 70 mod 11
    EXPECT_EQ(binomial_mod(8, 4, p11).residue(), 4u);
    EXPECT_EQ(binomial_mod(0, 0, p7).residue(), 1u);
    EXPECT_EQ(binomial_mod(6, 0, p7).residue(), 1u);
    EXPECT_EQ(binomial_mod(3, 5, p7).residue(), 0u);
}

TEST(Binomial, RequiresNBelowP) {
    try {
        (void)binomial_mod(7, 3, Prime(7));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ModulusTooSmall);
    }
}

TEST(Binomial, MatchesPascalOracleUpTo101) {
    const auto tri = oracle::pascal(100);
    for (u64 q = 2; q <= 101; ++q) {
        if (!is_prime(q)) continue;
        const Prime p(q);
        for (u32 n = 0; n < q; ++n)
            for (u32 r = 0; r <= n + 1; ++r) {
                const long long expect = r > n ? 0 : oracle::mod(tri[n][r], static_cast<long long>(q));
                ASSERT_EQ(binomial_mod(n, r, p).residue(), static_cast<u32>(expect)) << n << " " << r << " " << q;
            }
    }
}
