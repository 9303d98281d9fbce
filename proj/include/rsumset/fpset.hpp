#pragma once

/**
 * @file fpset.hpp
 * @brief Finite subsets of Z/pZ, their sumsets, and the classical checks
 *        built on top of them (progressions, affine normal form, pair labels).
 */

#include <rsumset/prime_field.hpp>

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace rsumset {

class FpSet {
public:
    explicit FpSet(Prime modulus) : modulus_(std::move(modulus)) {}

    // Reduces every value mod p, sorts, and drops duplicates.
    FpSet(Prime modulus, std::span<const i64> values);
    FpSet(Prime modulus, std::initializer_list<i64> values);

    // Builds from a bitmask (p <= 64 only).
    static FpSet from_mask(Prime modulus, u64 mask);

    const Prime& modulus() const noexcept { return modulus_; }
    const std::vector<u32>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    bool contains(u32 residue) const noexcept;

    // Requires p <= 64.
    u64 mask() const;

    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }

    friend bool operator==(const FpSet& a, const FpSet& b) noexcept {
        return a.modulus_ == b.modulus_ && a.elements_ == b.elements_;
    }
    // Lexicographic on the sorted residue sequences.
    friend bool operator<(const FpSet& a, const FpSet& b) noexcept { return a.elements_ < b.elements_; }

    // "0,1,2,3,5"
    std::string to_string() const;

private:
    Prime modulus_;
    std::vector<u32> elements_;
};

struct ParsedSet {
    FpSet set;
    std::vector<std::string> warnings;
};

// Comma-separated decimal residues. Values outside [0, p) are reduced and a
// warning is recorded; empty fields and non-numeric text raise ParseError.
ParsedSet parse_set_literal(std::string_view text, const Prime& p);

FpSet sumset(const FpSet& a, const FpSet& b);
FpSet restricted_sumset(const FpSet& a, const FpSet& b);

struct ApWitness {
    FieldElement start;
    FieldElement diff;
    std::size_t length;
};

// Every nonzero d for which s is a progression with common difference d.
// Sets of size <= 1 and the full field admit every d.
std::vector<u32> ap_differences(const FpSet& s);

// Lexicographically least (start, diff) witness, or nullopt. Throws EmptySet.
std::optional<ApWitness> is_arithmetic_progression(const FpSet& s);

// True iff s fits inside some progression of the given length with difference d.
bool contained_in_ap(const FpSet& s, u32 d, std::size_t length);

FpSet affine_image(const FpSet& s, const FieldElement& lambda, const FieldElement& mu);

struct CanonicalPair {
    FpSet a;
    FpSet b;
    u32 lambda;
    u32 mu;
};

// Least (lambda*A + mu, lambda*B + mu) over all lambda != 0 and mu.
CanonicalPair canonical_pair(const FpSet& a, const FpSet& b);

enum class PairLabel {
    cauchy_davenport_tight,
    vosper_case_singleton,
    vosper_case_complement,
    vosper_case_ap,
    hamidoune_rodseth_applicable,
    eh_tight,
    eh_plus_one,
    diagonal,
};

std::string_view to_string(PairLabel label) noexcept;

struct PairClassification {
    std::size_t k = 0;
    std::size_t l = 0;
    std::size_t sumset_size = 0;
    std::size_t restricted_size = 0;
    std::vector<PairLabel> labels; // ascending enum order
    // Set only when hamidoune_rodseth_applicable: whether both sets sit in
    // progressions of lengths k+1 and l+1 with a shared difference.
    std::optional<bool> hamidoune_rodseth_holds;

    bool has(PairLabel label) const noexcept;
};

PairClassification classify_pair(const FpSet& a, const FpSet& b);

} // namespace rsumset
