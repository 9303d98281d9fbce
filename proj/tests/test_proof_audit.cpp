#include <rsumset/enumeration.hpp>
#include <rsumset/proof_audit.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace rsumset;

namespace {

std::size_t count_passing(const AuditTrace& t, std::string_view prefix) {
    return static_cast<std::size_t>(std::count_if(t.records.begin(), t.records.end(), [&](const AuditRecord& r) {
        return r.pass && std::string_view(r.label).starts_with(prefix);
    }));
}

const AuditRecord* find_record(const AuditTrace& t, std::string_view label, int step) {
    for (const auto& r : t.records)
        if (r.label == label && r.step == step) return &r;
    return nullptr;
}

} // namespace

TEST(Audit, CleanTraceOnSmallExtremalPair) {
    const Prime p(11);
    const FpSet a(p, {0, 1, 2, 3, 5});
    const auto t = audit_sigma_chain(a, a);
    EXPECT_EQ(t.k, 5u);
    EXPECT_EQ(t.p, 11u);
    EXPECT_EQ(t.c.size(), 8u);
    EXPECT_TRUE(t.clean()) << (t.first_failure() ? t.first_failure()->label : "");
    EXPECT_EQ(t.first_failure(), nullptr);
    EXPECT_TRUE(t.warnings.empty());
    EXPECT_EQ(count_passing(t, "top."), 15u);

    ASSERT_EQ(t.steps.size(), 5u);
    EXPECT_EQ(t.steps[0].sigma_a, 0u);
    EXPECT_EQ(t.steps[1].sigma_a, 8u);
    for (const auto& s : t.steps) {
        EXPECT_EQ(s.sigma_a, s.sigma_b);
        EXPECT_EQ(s.even, s.i % 2 == 0);
        ASSERT_TRUE(s.recovered_sigma_a && s.recovered_sigma_b);
        EXPECT_EQ(*s.recovered_sigma_a, s.sigma_a);
        EXPECT_EQ(*s.recovered_sigma_b, s.sigma_b);
        EXPECT_NE(s.pivot, 0u);
        EXPECT_EQ(s.pivot, reduce_integer(s.pivot_exact, 11));
    }
    const auto* fin = find_record(t, "final.sets_equal", 6);
    ASSERT_NE(fin, nullptr);
    EXPECT_TRUE(fin->pass);
}

TEST(Audit, TopRowOfGridMatchesCij) {
    const Prime p(11);
    const FpSet a(p, {0, 1, 2, 3, 5});
    const BiPoly f = build_locus_poly(restricted_sumset(a, a));
    const auto grids = extract_grids(cn_decompose(f, a, a), 5);
    EXPECT_EQ(grids.a.at(4, 0), 3u);
    for (i64 i = 0; i < 5; ++i) {
        EXPECT_EQ(grids.a.at(4, i), cij(9, 5 + i, p).residue());
        EXPECT_EQ(grids.b.at(4, i), neg_mod(grids.a.at(4, i), 11));
    }
    EXPECT_EQ(grids.a.at(4, 5), 0u);
    EXPECT_EQ(grids.a.at(-1, 0), 0u);
    const auto top = audit_top_layer(grids, 5, p);
    EXPECT_EQ(top.size(), 15u);
    EXPECT_TRUE(std::all_of(top.begin(), top.end(), [](const AuditRecord& r) { return r.pass; }));
}

TEST(Audit, ExtractGridsRejectsHighDegree) {
    const Prime p(11);
    const FpSet a(p, {0, 1, 2, 3, 5});
    auto w = cn_decompose(build_locus_poly(restricted_sumset(a, a)), a, a);
    w.h_a.set(5, 0, 1);
    try {
        (void)extract_grids(w, 5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegreeTooHigh);
    }
}

TEST(Audit, BoundaryPrimeTwoKMinusOne) {
    // p = 2k-1: the top layer still holds but the even-step denominators vanish.
    const Prime p(11);
    const FpSet a(p, {0, 1, 2, 3, 4, 6});
    ASSERT_EQ(restricted_sumset(a, a).size(), 10u);
    const auto t = audit_sigma_chain(a, a);
    EXPECT_FALSE(t.warnings.empty());
    EXPECT_EQ(count_passing(t, "top."), 18u);
    EXPECT_FALSE(t.clean());
    const auto* denom = find_record(t, "even.denominator.nonzero", 2);
    ASSERT_NE(denom, nullptr);
    EXPECT_EQ(denom->lhs, 0u);
    EXPECT_FALSE(denom->pass);
}

TEST(Audit, HypothesisViolations) {
    const Prime p(11);
    const auto expect_violation = [](const FpSet& a, const FpSet& b) {
        try {
            (void)audit_sigma_chain(a, b);
            FAIL() << a.to_string() << " | " << b.to_string();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::HypothesisViolation);
        }
    };
    expect_violation(FpSet(p, {0, 1, 2, 3}), FpSet(p, {0, 1, 2, 3, 5}));   // sizes differ
    expect_violation(FpSet(p, {0, 1, 2, 3, 4}), FpSet(p, {0, 1, 2, 3, 4})); // |A+B| = 2k-3
    expect_violation(FpSet(p, {0, 1, 3, 7, 9}), FpSet(p, {0, 2, 4, 5, 6})); // too large
    expect_violation(FpSet(p, {4}), FpSet(p, {4}));                          // k < 2
    const Prime p7(7);
    expect_violation(FpSet(p7, {0, 1, 2, 3, 5}), FpSet(p7, {0, 1, 2, 3, 5})); // p <= 2k-2
}

TEST(Audit, InconsistentSigmasDirtyTheTrace) {
    const Prime p(11);
    const FpSet a(p, {0, 1, 2, 3, 5});
    AuditOptions opt;
    opt.sigma_source_override = FpSet(p, {1, 2, 3, 4, 5, 6, 7, 9});
    const auto t = audit_sigma_chain(a, a, opt);
    EXPECT_FALSE(t.clean());
    ASSERT_NE(t.first_failure(), nullptr);
    EXPECT_GE(t.first_failure()->step, 1);
}

TEST(Audit, NonVanishingInputIsRejectedBeforeAnyRecord) {
    // A locus poly built from a set missing one restricted sum does not vanish on A x A.
    const Prime p(11);
    const FpSet a(p, {0, 1, 2, 3, 5});
    const BiPoly f = build_locus_poly(FpSet(p, {1, 2, 3, 4, 5, 6, 7, 9}));
    try {
        (void)cn_decompose(f, a, a);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotVanishing);
    }
}

TEST(Audit, AllExtremalClassesAtElevenFive) {
    const auto traces = audit_all_extremal(Prime(11), 5);
    ASSERT_FALSE(traces.empty());
    for (const auto& t : traces) EXPECT_TRUE(t.clean()) << t.a.to_string();
}

TEST(Audit, SerializationIsStableAndComplete) {
    const Prime p(13);
    const FpSet a(p, {0, 1, 2, 3, 5});
    const auto t1 = audit_sigma_chain(a, a), t2 = audit_sigma_chain(a, a);
    const std::string s = serialize_trace(t1);
    EXPECT_EQ(s, serialize_trace(t2));
    EXPECT_EQ(static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')), t1.records.size());
    EXPECT_NE(s.find("label=top.A_eq_C"), std::string::npos);
    EXPECT_NE(s.find("pass="), std::string::npos);
}

TEST(ClosedForms, EvenDenominatorMatchesExactly) {
    for (u32 k = 2; k <= 13; ++k)
        for (u32 r = 1; r <= k - 1; ++r)
            ASSERT_EQ(BigRational(even_denominator_direct(k, r)), even_denominator_closed_form(k, r)) << k << "," << r;
    EXPECT_EQ(even_denominator_direct(5, 1), BigInt(-42));
}

TEST(ClosedForms, OddPivotClosedFormDisagrees) {
    EXPECT_EQ(odd_pivot_direct(5, 0), BigInt(-14));
    EXPECT_EQ(odd_pivot_closed_form(5, 0), BigRational(-35, 2));
    // the direct value is still nonzero for every k, r in range
    for (u32 k = 2; k <= 13; ++k)
        for (u32 r = 0; 2 * r + 1 <= k; ++r) ASSERT_NE(odd_pivot_direct(k, r), 0) << k << "," << r;
}

TEST(ClosedForms, CijExactAgainstPascal) {
    const auto t = oracle::pascal(60);
    const auto C = [&](int n, int r) -> oracle::Big { return r < 0 || r > n ? 0 : t[n][r]; };
    for (u32 i = 1; i <= 50; ++i)
        for (i64 j = 0; j <= i; ++j) {
            ASSERT_EQ(cij_exact(i, j), C(i - 1, j - 1) - C(i - 1, j));
            if (j >= 1 && j <= i - 1) ASSERT_EQ(BigRational(cij_exact(i, j)), cij_ratio_form(i, j));
        }
}

TEST(ClosedForms, ReduceRational) {
    EXPECT_EQ(reduce_rational(BigRational(-35, 2), 11), std::optional<u32>(reduce_integer(BigInt(-35) * 6, 11)));
    EXPECT_FALSE(reduce_rational(BigRational(1, 11), 11));
    EXPECT_EQ(reduce_integer(BigInt(-14), 11), 8u);
    EXPECT_EQ(to_string(BigRational(-35, 2)), "-35/2");
}

TEST(Reconstruct, Examples) {
    const Prime p11(11), p7(7);
    EXPECT_EQ(reconstruct_from_sigmas(SymmetricProfile{p11, {1, 0, 8}}, p11), FpSet(p11, {5, 6}));
    EXPECT_EQ(reconstruct_from_sigmas(SymmetricProfile{p7, {1, 1, 1}}, p7), FpSet(p7, {3, 5}));
    // z^2 + 1 has no roots mod 7
    try {
        (void)reconstruct_from_sigmas(SymmetricProfile{p7, {1, 0, 1}}, p7);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotSplitting);
    }
}

TEST(Reconstruct, RandomRoundTrip) {
    std::mt19937_64 rng(21);
    for (u64 q : {11, 13, 17}) {
        const Prime p(q);
        for (int trial = 0; trial < 100; ++trial) {
            const auto v = oracle::random_subset(rng, q, 1 + rng() % (q - 1));
            const FpSet s(p, std::vector<i64>(v.begin(), v.end()));
            ASSERT_EQ(reconstruct_from_sigmas(elementary_symmetric(s), p), s);
        }
    }
}
