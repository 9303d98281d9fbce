#pragma once

/**
 * @file enumeration.hpp
 * @brief Exhaustive sweeps over pairs of subsets of Z/pZ.
 *
 * Theorem sweeps scan pairs of k-subsets for a target restricted-sumset size
 * and group the hits into affine classes {(lambda*A + mu, lambda*B + mu)}
 * (up to swapping A and B). Pruning restricts A to affine orbit minima; it
 * changes pairs_scanned but never the class lists. Reports contain no timing
 * or worker information, so they are byte-identical across runs.
 */

#include <rsumset/fpset.hpp>
#include <rsumset/proof_audit.hpp>

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rsumset {

u64 binomial_u64(u64 n, u64 k);

// All k-subsets of Z/pZ in lexicographic order, restartable from any index.
class KSubsetStream {
public:
    // Throws KTooLarge when k > p.
    KSubsetStream(Prime p, std::size_t k, u64 start_index = 0);

    u64 total() const noexcept { return total_; }
    u64 index() const noexcept { return index_; }
    bool done() const noexcept { return index_ >= total_; }

    const std::vector<u32>& current() const noexcept { return current_; }
    FpSet current_set() const;
    void advance();

private:
    Prime p_;
    std::size_t k_;
    u64 total_;
    u64 index_;
    std::vector<u32> current_;
};

std::vector<FpSet> enumerate_k_subsets(const Prime& p, std::size_t k, u64 start_index = 0,
                                       std::optional<u64> limit = std::nullopt);

struct SweepConfig {
    unsigned workers = 1;
    bool prune = true;
    // Largest p accepted without an explicit override.
    std::optional<u32> ceiling;
    // Restricted-sumset size scanned by the main sweep (default 2k-2).
    std::optional<u32> target;
};

inline constexpr u32 kDefaultTheoremCeiling = 17;
inline constexpr u32 kDefaultBoundsCeiling = 13;

struct PairRecord {
    FpSet a;
    FpSet b;
    std::size_t k = 0;
    std::size_t restricted_size = 0;
    std::vector<PairLabel> labels;
    bool equal = false;
    std::optional<ApWitness> ap; // for A
};

// Canonical representative of the unordered affine class of (A, B).
std::pair<FpSet, FpSet> class_key(const FpSet& a, const FpSet& b);
PairRecord make_pair_record(const FpSet& a, const FpSet& b);

struct BoundViolation {
    FpSet a;
    FpSet b;
    std::string bound; // cauchy_davenport | erdos_heilbronn | dias_da_silva_hamidoune
    std::size_t observed;
    std::size_t required;
};

enum class SweepKind { main, karolyi, bounds };
std::string_view to_string(SweepKind kind) noexcept;

struct SweepReport {
    SweepKind kind = SweepKind::main;
    u32 p = 0;
    u32 k = 0;
    u32 target = 0;
    bool pruned = false;
    u64 pairs_scanned = 0; // ordered pairs covered
    std::vector<std::pair<std::string, bool>> hypotheses;
    bool expectation_applies = false;
    std::vector<PairRecord> extremal;        // sorted by class key
    std::vector<PairRecord> counterexamples; // subset of extremal
    // Karolyi converse: every diagonal progression of length k attains 2k-3.
    u64 converse_checked = 0;
    std::vector<FpSet> converse_failures;
    // Bounds sweep
    std::vector<BoundViolation> violations;
    double wall_seconds = 0.0; // not serialized

    bool passed() const noexcept;
    std::size_t exception_count() const noexcept;
};

SweepReport verify_main_theorem(const Prime& p, u32 k, const SweepConfig& config = {});
SweepReport verify_karolyi_inverse(const Prime& p, u32 k, const SweepConfig& config = {});
SweepReport verify_bounds(const Prime& p, const SweepConfig& config = {});

// Recomputes every counterexample from scratch; true iff each still is one.
bool reverify_counterexamples(const SweepReport& report);

// Audits every extremal class of the main sweep, in report order.
std::vector<AuditTrace> audit_all_extremal(const Prime& p, u32 k, const SweepConfig& config = {});

// Stable JSON document (fixed key order, two-space indent, trailing newline).
std::string render_report_json(const SweepReport& report);

} // namespace rsumset
