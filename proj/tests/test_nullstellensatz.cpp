#include <rsumset/nullstellensatz.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace rsumset;

namespace {

FpSet random_set(std::mt19937_64& rng, const Prime& p, std::size_t size) {
    const auto v = oracle::random_subset(rng, p.value(), size);
    return FpSet(p, std::vector<i64>(v.begin(), v.end()));
}

BiPoly random_bipoly(std::mt19937_64& rng, const Prime& p, int max_deg) {
    BiPoly f(p);
    for (int i = 0; i <= max_deg; ++i)
        for (int j = 0; i + j <= max_deg; ++j)
            if (rng() % 2 == 0) f.set(i, j, static_cast<i64>(rng() % p.value()));
    return f;
}

} // namespace

TEST(Cn, VanishingPolynomialOfFirstGrid) {
    const Prime p(11);
    const FpSet sx(p, {0, 1, 2}), sy(p, {3, 4});
    const BiPoly f = BiPoly::in_x(vanishing_polynomial(sx));
    const auto w = cn_decompose(f, sx, sy);
    EXPECT_EQ(w.h_a, BiPoly::monomial(p, 0, 0, 1));
    EXPECT_TRUE(w.h_b.is_zero());
    EXPECT_EQ(w.degree_bound_a, 0);
    EXPECT_EQ(w.degree_bound_b, 1);
    EXPECT_TRUE(verify_witness(f, w));
}

TEST(Cn, VanishingPolynomialOfSecondGrid) {
    const Prime p(11);
    const FpSet sx(p, {0, 1, 2}), sy(p, {3, 4});
    const BiPoly f = BiPoly::in_y(vanishing_polynomial(sy)) * BiPoly::monomial(p, 1, 0, 1);
    const auto w = cn_decompose(f, sx, sy);
    EXPECT_TRUE(w.h_a.is_zero());
    EXPECT_EQ(w.h_b, BiPoly::monomial(p, 1, 0, 1));
    EXPECT_TRUE(verify_witness(f, w));
}

TEST(Cn, ZeroPolynomial) {
    const Prime p(7);
    const FpSet s(p, {1, 2});
    const auto w = cn_decompose(BiPoly(p), s, s);
    EXPECT_TRUE(w.h_a.is_zero());
    EXPECT_TRUE(w.h_b.is_zero());
    EXPECT_TRUE(verify_witness(BiPoly(p), w));
}

TEST(Cn, Linearity) {
    std::mt19937_64 rng(8);
    const Prime p(13);
    const FpSet sx = random_set(rng, p, 4), sy = random_set(rng, p, 3);
    const BiPoly gx = BiPoly::in_x(vanishing_polynomial(sx)), gy = BiPoly::in_y(vanishing_polynomial(sy));
    for (int trial = 0; trial < 20; ++trial) {
        const BiPoly f1 = random_bipoly(rng, p, 3) * gx + random_bipoly(rng, p, 3) * gy;
        const BiPoly f2 = random_bipoly(rng, p, 3) * gx + random_bipoly(rng, p, 3) * gy;
        const auto w1 = cn_decompose(f1, sx, sy), w2 = cn_decompose(f2, sx, sy);
        const auto w = cn_decompose(f1 + f2, sx, sy);
        ASSERT_EQ(w.h_a, w1.h_a + w2.h_a);
        ASSERT_EQ(w.h_b, w1.h_b + w2.h_b);
    }
}

TEST(Cn, RandomRoundTrip) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const Prime p(std::vector<u64>{7, 11, 13, 17}[trial % 4]);
        const FpSet sx = random_set(rng, p, 1 + rng() % 5), sy = random_set(rng, p, 1 + rng() % 5);
        const BiPoly f = random_bipoly(rng, p, static_cast<int>(rng() % 5)) * BiPoly::in_x(vanishing_polynomial(sx)) +
                         random_bipoly(rng, p, static_cast<int>(rng() % 5)) * BiPoly::in_y(vanishing_polynomial(sy));
        ASSERT_TRUE(vanishes_on_grid(f, sx, sy));
        const auto w = cn_decompose(f, sx, sy);
        const auto verdict = verify_witness(f, w);
        ASSERT_TRUE(verdict.ok) << verdict.diagnostic;
        // the reduction by g_A first leaves h_B with x-degree below |Sx|
        ASSERT_LT(w.h_b.x_degree(), static_cast<int>(sx.size()));
    }
}

TEST(Cn, NotVanishingFuzz) {
    std::mt19937_64 rng(10);
    int hits = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Prime p(11);
        const FpSet sx = random_set(rng, p, 1 + rng() % 4), sy = random_set(rng, p, 1 + rng() % 4);
        const BiPoly f = random_bipoly(rng, p, 4);
        const auto point = find_nonvanishing_point(f, sx, sy);
        if (!point) {
            EXPECT_NO_THROW((void)cn_decompose(f, sx, sy));
            continue;
        }
        ++hits;
        ASSERT_NE(f.evaluate(point->first, point->second), 0u);
        ASSERT_FALSE(vanishes_on_grid(f, sx, sy));
        try {
            (void)cn_decompose(f, sx, sy);
            FAIL();
        } catch (const Error& e) {
            ASSERT_EQ(e.code(), ErrorCode::NotVanishing);
        }
    }
    EXPECT_GT(hits, 150);
}

TEST(Cn, RejectsPerturbedWitness) {
    const Prime p(13);
    const FpSet sx(p, {1, 4, 7}), sy(p, {0, 2, 5});
    const BiPoly f = BiPoly::monomial(p, 1, 1, 3) * BiPoly::in_x(vanishing_polynomial(sx)) +
                     BiPoly::monomial(p, 2, 0, 5) * BiPoly::in_y(vanishing_polynomial(sy));
    auto w = cn_decompose(f, sx, sy);
    ASSERT_TRUE(verify_witness(f, w));
    w.h_a.add_to(0, 0, 1);
    const auto verdict = verify_witness(f, w);
    EXPECT_FALSE(verdict.ok);
    EXPECT_NE(verdict.diagnostic.find("coefficient"), std::string::npos);
}

TEST(Cn, RejectsWitnessBreakingDegreeBound) {
    // Trading g_A(x) g_B(y) between the two sides keeps the identity but not the bound.
    const Prime p(11);
    const FpSet sx(p, {0, 1, 2}), sy(p, {3, 4, 5});
    const BiPoly f = BiPoly::in_x(vanishing_polynomial(sx));
    auto w = cn_decompose(f, sx, sy);
    w.h_a = w.h_a + BiPoly::in_y(w.g_b);
    w.h_b = w.h_b - BiPoly::in_x(w.g_a);
    const auto verdict = verify_witness(f, w);
    EXPECT_FALSE(verdict.ok);
    EXPECT_NE(verdict.diagnostic.find("deg h_A"), std::string::npos);
}

TEST(Cn, Deterministic) {
    const Prime p(11);
    const FpSet a(p, {0, 1, 2, 3, 5});
    const BiPoly f = build_locus_poly(restricted_sumset(a, a));
    const auto w1 = cn_decompose(f, a, a), w2 = cn_decompose(f, a, a);
    EXPECT_EQ(w1.h_a, w2.h_a);
    EXPECT_EQ(w1.h_b, w2.h_b);
    EXPECT_EQ(to_text(w1.h_a), to_text(w2.h_a));
}

TEST(Cn, LocusPolyOfExtremalPairHasLowDegreeWitness) {
    const Prime p(11);
    const FpSet a(p, {0, 1, 2, 3, 5});
    const BiPoly f = build_locus_poly(restricted_sumset(a, a));
    ASSERT_EQ(f.total_degree(), 9);
    const auto w = cn_decompose(f, a, a);
    EXPECT_TRUE(verify_witness(f, w));
    EXPECT_LE(w.h_a.total_degree(), 4);
    EXPECT_LE(w.h_b.total_degree(), 4);
}
