#pragma once

/**
 * @file proof_audit.hpp
 * @brief Replays the coefficient-identity induction behind "|A|=|B|=k and
 *        |A restricted+ B| = 2k-2 imply A = B" on a concrete pair.
 *
 * The audit builds f(x,y) = (x-y) prod_{c in C} (x+y-c) for C = A restricted+ B,
 * takes its canonical Nullstellensatz witness f = h_A g_A(x) + h_B g_B(y),
 * reads the homogeneous coefficient grids of h_A and h_B, and checks every
 * monomial identity the induction relies on. Failed identities are recorded,
 * never thrown: a dirty trace is a finding about the instance.
 *
 * Grid conventions (note the mirror on the B side):
 *   A_{i,j} = coefficient of x^j y^(i-j) in h_A
 *   B_{i,j} = coefficient of x^(i-j) y^j in h_B
 */

#include <rsumset/closed_forms.hpp>
#include <rsumset/fpset.hpp>
#include <rsumset/nullstellensatz.hpp>
#include <rsumset/polynomial.hpp>

#include <optional>
#include <string>
#include <vector>

namespace rsumset {

class CoefficientGrid {
public:
    explicit CoefficientGrid(std::size_t k) : rows_(k) {
        for (std::size_t i = 0; i < k; ++i) rows_[i].assign(i + 1, 0);
    }

    std::size_t rows() const noexcept { return rows_.size(); }
    // 0 for indices outside 0 <= j <= i < k.
    u32 at(i64 i, i64 j) const noexcept {
        if (i < 0 || j < 0 || j > i || static_cast<std::size_t>(i) >= rows_.size()) return 0;
        return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    void set(std::size_t i, std::size_t j, u32 v) { rows_.at(i).at(j) = v; }

    friend bool operator==(const CoefficientGrid&, const CoefficientGrid&) = default;

private:
    std::vector<std::vector<u32>> rows_;
};

struct GridPair {
    CoefficientGrid a;
    CoefficientGrid b;
};

// Throws DegreeTooHigh if either h exceeds total degree k-1.
GridPair extract_grids(const CnWitness& w, std::size_t k);

struct AuditRecord {
    int step = 0; // 0 = top layer, k+1 = final comparison
    std::string label;
    u32 lhs = 0;
    u32 rhs = 0;
    bool pass = false;
    // Informational records are reported but do not affect clean().
    bool gating = true;
    std::string detail;
};

struct StepSummary {
    u32 i = 0;
    bool even = false;
    u32 r = 0;
    u32 sigma_a = 0, sigma_b = 0, sigma_c = 0;
    std::optional<u32> recovered_sigma_a, recovered_sigma_b;
    std::optional<u32> rho; // even steps only
    // Even: B_{k-1,r-1} + B_{k-1,r}. Odd: B_{k-1,r}. Read from the grid mod p.
    u32 pivot = 0;
    BigInt pivot_exact;             // the same quantity over the integers, from C_{2k-1,*}
    BigRational pivot_closed_form;  // closed-form expression for the same quantity
    std::optional<u32> pivot_closed_form_mod_p;
    bool closed_form_agrees = false; // exact rational comparison
};

struct AuditTrace {
    AuditTrace(FpSet a_, FpSet b_, FpSet c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}

    u32 p = 0;
    std::size_t k = 0;
    FpSet a, b, c;
    std::vector<AuditRecord> records;
    std::vector<StepSummary> steps;
    std::vector<std::string> warnings;

    bool clean() const noexcept;
    const AuditRecord* first_failure() const noexcept;
};

// Top layer: A_{k-1,i} = C_{2k-1,k+i}, B_{k-1,i} = -A_{k-1,i},
// A_{k-1,i} != 0, for 0 <= i <= k-1.
std::vector<AuditRecord> audit_top_layer(const GridPair& grids, std::size_t k, const Prime& p);

struct AuditOptions {
    // Take sigma_i(C) from this set instead of A restricted+ B. The witness is
    // still built from the true locus polynomial; used to show the audit
    // detects inconsistent data.
    std::optional<FpSet> sigma_source_override;
};

// Throws HypothesisViolation unless |A| = |B| = k >= 2, |A restricted+ B| = 2k-2
// and p > 2k-2. Warns (without failing) when p = 2k-1.
AuditTrace audit_sigma_chain(const FpSet& a, const FpSet& b, const AuditOptions& options = {});

// Roots of z^k - s_1 z^(k-1) + ... + (-1)^k s_k. Throws NotSplitting when
// there are fewer than k distinct roots.
FpSet reconstruct_from_sigmas(const SymmetricProfile& profile, const Prime& p);

// One "key=value ..." line per record: step, label, lhs, rhs, pass, gating.
std::string serialize_trace(const AuditTrace& trace);

} // namespace rsumset
