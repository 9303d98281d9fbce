#include <rsumset/fpset.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace rsumset {

namespace {

void require_same_modulus(const FpSet& a, const FpSet& b) {
    if (!(a.modulus() == b.modulus()))
        throw Error(ErrorCode::ModulusMismatch, "sets live in Z/" + std::to_string(a.modulus().value()) + " and Z/" +
                                                    std::to_string(b.modulus().value()));
}

FpSet from_flags(const Prime& p, const std::vector<char>& flags) {
    std::vector<i64> values;
    for (u32 r = 0; r < p.value(); ++r)
        if (flags[r]) values.push_back(r);
    return FpSet(p, values);
}

std::vector<char> flags_of(const FpSet& s) {
    std::vector<char> flags(s.modulus().value(), 0);
    for (u32 x : s) flags[x] = 1;
    return flags;
}

} // namespace

FpSet::FpSet(Prime modulus, std::span<const i64> values) : modulus_(std::move(modulus)) {
    elements_.reserve(values.size());
    for (i64 v : values) elements_.push_back(reduce(v, modulus_.value()));
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

FpSet::FpSet(Prime modulus, std::initializer_list<i64> values)
    : FpSet(std::move(modulus), std::span<const i64>(values.begin(), values.size())) {}

FpSet FpSet::from_mask(Prime modulus, u64 mask) {
    if (modulus.value() > 64) throw Error(ErrorCode::IndexOutOfRange, "bitmask sets need p <= 64");
    FpSet s(std::move(modulus));
    for (u32 r = 0; r < s.modulus_.value(); ++r)
        if (mask >> r & 1) s.elements_.push_back(r);
    return s;
}

bool FpSet::contains(u32 residue) const noexcept {
    return std::binary_search(elements_.begin(), elements_.end(), residue);
}

u64 FpSet::mask() const {
    if (modulus_.value() > 64) throw Error(ErrorCode::IndexOutOfRange, "bitmask sets need p <= 64");
    u64 m = 0;
    for (u32 x : elements_) m |= u64{1} << x;
    return m;
}

std::string FpSet::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < elements_.size(); ++i) os << (i ? "," : "") << elements_[i];
    return os.str();
}

ParsedSet parse_set_literal(std::string_view text, const Prime& p) {
    std::vector<i64> values;
    std::vector<std::string> warnings;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (!text.empty()) {
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = text.find(',', pos);
            std::string_view field = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
            if (field.empty())
                throw Error(ErrorCode::ParseError, "empty field in set literal \"" + std::string(text) + "\"");
            i64 v = 0;
            auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
            if (ec != std::errc{} || end != field.data() + field.size())
                throw Error(ErrorCode::ParseError, "not an integer: \"" + std::string(field) + "\"");
            if (v < 0 || v >= static_cast<i64>(p.value()))
                warnings.push_back(std::to_string(v) + " reduced to " + std::to_string(reduce(v, p.value())) +
                                   " mod " + std::to_string(p.value()));
            values.push_back(v);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    FpSet set(p, values);
    if (set.size() != values.size()) warnings.push_back("duplicate residues dropped");
    return {std::move(set), std::move(warnings)};
}

FpSet sumset(const FpSet& a, const FpSet& b) {
    require_same_modulus(a, b);
    const u32 p = a.modulus().value();
    std::vector<char> flags(p, 0);
    for (u32 x : a)
        for (u32 y : b) flags[add_mod(x, y, p)] = 1;
    return from_flags(a.modulus(), flags);
}

FpSet restricted_sumset(const FpSet& a, const FpSet& b) {
    require_same_modulus(a, b);
    const u32 p = a.modulus().value();
    std::vector<char> flags(p, 0);
    for (u32 x : a)
        for (u32 y : b)
            if (x != y) flags[add_mod(x, y, p)] = 1;
    return from_flags(a.modulus(), flags);
}

std::vector<u32> ap_differences(const FpSet& s) {
    const u32 p = s.modulus().value();
    std::vector<u32> diffs;
    if (s.size() <= 1 || s.size() == p) {
        for (u32 d = 1; d < p; ++d) diffs.push_back(d);
        return diffs;
    }
    const auto flags = flags_of(s);
    // Under x -> x + d the field is a single p-cycle; s is a progression with
    // difference d iff it is one contiguous arc, i.e. exactly |s| - 1 of its
    // elements have their successor inside s.
    for (u32 d = 1; d < p; ++d) {
        std::size_t inside = 0;
        for (u32 x : s) inside += flags[add_mod(x, d, p)] ? 1 : 0;
        if (inside + 1 == s.size()) diffs.push_back(d);
    }
    return diffs;
}

std::optional<ApWitness> is_arithmetic_progression(const FpSet& s) {
    if (s.empty()) throw Error(ErrorCode::EmptySet, "progression test on the empty set");
    const Prime& p = s.modulus();
    if (s.size() == 1) return ApWitness{FieldElement(s.elements()[0], p), FieldElement(1, p), 1};
    if (s.size() == p.value()) return ApWitness{FieldElement(0, p), FieldElement(1, p), s.size()};

    const auto flags = flags_of(s);
    std::optional<std::pair<u32, u32>> best;
    for (u32 d : ap_differences(s)) {
        for (u32 x : s) {
            if (flags[sub_mod(x, d, p.value())]) continue;
            std::pair<u32, u32> cand{x, d};
            if (!best || cand < *best) best = cand;
            break;
        }
    }
    if (!best) return std::nullopt;
    return ApWitness{FieldElement(best->first, p), FieldElement(best->second, p), s.size()};
}

bool contained_in_ap(const FpSet& s, u32 d, std::size_t length) {
    const u32 p = s.modulus().value();
    if (s.size() > length) return false;
    if (s.empty() || length >= p) return true;
    const u32 d_inv = inverse_mod(d, p);
    for (u32 start : s) {
        bool ok = true;
        for (u32 y : s) {
            // position of y along the progression starting at `start`
            u32 t = mul_mod(sub_mod(y, start, p), d_inv, p);
            if (t >= length) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

FpSet affine_image(const FpSet& s, const FieldElement& lambda, const FieldElement& mu) {
    if (!(lambda.modulus() == s.modulus()) || !(mu.modulus() == s.modulus()))
        throw Error(ErrorCode::ModulusMismatch, "affine map and set use different moduli");
    if (lambda.is_zero()) throw Error(ErrorCode::ZeroDilation, "lambda must be nonzero");
    const u32 p = s.modulus().value();
    std::vector<i64> out;
    out.reserve(s.size());
    for (u32 x : s) out.push_back(add_mod(mul_mod(lambda.residue(), x, p), mu.residue(), p));
    return FpSet(s.modulus(), out);
}

CanonicalPair canonical_pair(const FpSet& a, const FpSet& b) {
    require_same_modulus(a, b);
    if (a.empty()) throw Error(ErrorCode::EmptySet, "canonical_pair needs a nonempty first set");
    const Prime& p = a.modulus();
    std::optional<CanonicalPair> best;
    for (u32 lambda = 1; lambda < p.value(); ++lambda) {
        const FieldElement l(lambda, p);
        for (u32 mu = 0; mu < p.value(); ++mu) {
            const FieldElement m(mu, p);
            FpSet ia = affine_image(a, l, m);
            if (best && best->a < ia) continue;
            FpSet ib = affine_image(b, l, m);
            if (!best || std::tie(ia.elements(), ib.elements()) < std::tie(best->a.elements(), best->b.elements()))
                best = CanonicalPair{std::move(ia), std::move(ib), lambda, mu};
        }
    }
    return std::move(*best);
}

std::string_view to_string(PairLabel label) noexcept {
    switch (label) {
    case PairLabel::cauchy_davenport_tight: return "cauchy_davenport_tight";
    case PairLabel::vosper_case_singleton: return "vosper_case_singleton";
    case PairLabel::vosper_case_complement: return "vosper_case_complement";
    case PairLabel::vosper_case_ap: return "vosper_case_ap";
    case PairLabel::hamidoune_rodseth_applicable: return "hamidoune_rodseth_applicable";
    case PairLabel::eh_tight: return "eh_tight";
    case PairLabel::eh_plus_one: return "eh_plus_one";
    case PairLabel::diagonal: return "diagonal";
    }
    return "unknown";
}

bool PairClassification::has(PairLabel label) const noexcept {
    return std::find(labels.begin(), labels.end(), label) != labels.end();
}

PairClassification classify_pair(const FpSet& a, const FpSet& b) {
    require_same_modulus(a, b);
    if (a.empty() || b.empty()) throw Error(ErrorCode::EmptySet, "classify_pair needs nonempty sets");
    const Prime& p = a.modulus();
    const FpSet full = sumset(a, b);

    PairClassification c;
    c.k = a.size();
    c.l = b.size();
    c.sumset_size = full.size();
    c.restricted_size = restricted_sumset(a, b).size();
    const std::size_t kl = c.k + c.l;

    if (c.sumset_size + 1 == kl) c.labels.push_back(PairLabel::cauchy_davenport_tight);

    if (c.sumset_size < p.value()) {
        if (std::min(c.k, c.l) == 1) c.labels.push_back(PairLabel::vosper_case_singleton);
        if (c.sumset_size + 1 == p.value()) {
            u32 missing = 0;
            while (full.contains(missing)) ++missing;
            // B = F \ (c - A)
            std::vector<char> in_shift(p.value(), 0);
            for (u32 x : a) in_shift[sub_mod(missing, x, p.value())] = 1;
            std::vector<i64> complement;
            for (u32 r = 0; r < p.value(); ++r)
                if (!in_shift[r]) complement.push_back(r);
            if (FpSet(p, complement) == b) c.labels.push_back(PairLabel::vosper_case_complement);
        }
        const auto da = ap_differences(a);
        const auto db = ap_differences(b);
        const bool shared = std::any_of(da.begin(), da.end(),
                                        [&](u32 d) { return std::binary_search(db.begin(), db.end(), d); });
        if (shared) c.labels.push_back(PairLabel::vosper_case_ap);
    }

    if (c.k >= 3 && c.l >= 4 && c.sumset_size == kl && kl + 4 <= p.value()) {
        c.labels.push_back(PairLabel::hamidoune_rodseth_applicable);
        bool holds = false;
        for (u32 d = 1; d < p.value() && !holds; ++d)
            holds = contained_in_ap(a, d, c.k + 1) && contained_in_ap(b, d, c.l + 1);
        c.hamidoune_rodseth_holds = holds;
    }

    if (c.restricted_size + 3 == kl) c.labels.push_back(PairLabel::eh_tight);
    if (c.restricted_size + 2 == kl) c.labels.push_back(PairLabel::eh_plus_one);
    if (a == b) c.labels.push_back(PairLabel::diagonal);
    return c;
}

} // namespace rsumset
