#include <rsumset/bitset_kernel.hpp>
#include <rsumset/enumeration.hpp>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <thread>

namespace rsumset {

using kernel::Mask;

u64 binomial_u64(u64 n, u64 k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (u64 t = 1; t <= k; ++t) {
        c = c * (n - k + t) / t;
        if (c > std::numeric_limits<u64>::max())
            throw Error(ErrorCode::KTooLarge, "C(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows");
    }
    return static_cast<u64>(c);
}

// ------------------------------------------------------------ k-subsets

KSubsetStream::KSubsetStream(Prime p, std::size_t k, u64 start_index)
    : p_(std::move(p)), k_(k), total_(0), index_(start_index) {
    if (k > p_.value())
        throw Error(ErrorCode::KTooLarge, "k = " + std::to_string(k) + " exceeds p = " + std::to_string(p_.value()));
    total_ = binomial_u64(p_.value(), k);
    if (done()) return;
    // Unrank: choose each element in turn, skipping blocks of C(remaining, slots) subsets.
    u64 rank = start_index;
    u32 next = 0;
    for (std::size_t slot = 0; slot < k; ++slot) {
        while (true) {
            const u64 block = binomial_u64(p_.value() - next - 1, k - slot - 1);
            if (rank < block) break;
            rank -= block;
            ++next;
        }
        current_.push_back(next++);
    }
}

FpSet KSubsetStream::current_set() const {
    std::vector<i64> values(current_.begin(), current_.end());
    return FpSet(p_, values);
}

void KSubsetStream::advance() {
    if (done()) return;
    ++index_;
    if (done()) return;
    const u32 p = p_.value();
    std::size_t pos = k_;
    while (pos > 0 && current_[pos - 1] == p - (k_ - pos) - 1) --pos;
    // pos > 0 is guaranteed while index_ < total_
    ++current_[pos - 1];
    for (std::size_t t = pos; t < k_; ++t) current_[t] = current_[t - 1] + 1;
}

std::vector<FpSet> enumerate_k_subsets(const Prime& p, std::size_t k, u64 start_index, std::optional<u64> limit) {
    std::vector<FpSet> out;
    for (KSubsetStream s(p, k, start_index); !s.done() && (!limit || out.size() < *limit); s.advance())
        out.push_back(s.current_set());
    return out;
}

// ------------------------------------------------------------- records

std::pair<FpSet, FpSet> class_key(const FpSet& a, const FpSet& b) {
    CanonicalPair x = canonical_pair(a, b);
    CanonicalPair y = canonical_pair(b, a);
    if (std::tie(y.a.elements(), y.b.elements()) < std::tie(x.a.elements(), x.b.elements()))
        return {std::move(y.a), std::move(y.b)};
    return {std::move(x.a), std::move(x.b)};
}

PairRecord make_pair_record(const FpSet& a, const FpSet& b) {
    const PairClassification c = classify_pair(a, b);
    return PairRecord{a, b, a.size(), c.restricted_size, c.labels, a == b, is_arithmetic_progression(a)};
}

std::string_view to_string(SweepKind kind) noexcept {
    switch (kind) {
    case SweepKind::main: return "main";
    case SweepKind::karolyi: return "karolyi";
    case SweepKind::bounds: return "bounds";
    }
    return "unknown";
}

bool SweepReport::passed() const noexcept { return exception_count() == 0 || !expectation_applies; }

std::size_t SweepReport::exception_count() const noexcept {
    return counterexamples.size() + converse_failures.size() + violations.size();
}

// --------------------------------------------------------------- sweeps

namespace {

u32 checked_ceiling(const Prime& p, const SweepConfig& config, u32 fallback) {
    const u32 ceiling = config.ceiling.value_or(fallback);
    if (p.value() > ceiling)
        throw Error(ErrorCode::CeilingExceeded, "p = " + std::to_string(p.value()) + " exceeds the exhaustive ceiling " +
                                                    std::to_string(ceiling) + " (override with a larger ceiling)");
    if (p.value() > 64)
        throw Error(ErrorCode::CeilingExceeded, "exhaustive sweeps use 64-bit masks and need p <= 64");
    return ceiling;
}

// Run body(begin, end, out) over contiguous shards of [0, n) and concatenate
// the per-shard outputs in shard order.
template <class T, class Body>
std::vector<T> run_sharded(std::size_t n, unsigned workers, Body body) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    std::vector<std::vector<T>> parts(workers);
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = n * w / workers, end = n * (w + 1) / workers;
        threads.emplace_back([&, w, begin, end] { body(begin, end, parts[w]); });
    }
    for (auto& t : threads) t.join();
    std::vector<T> out;
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    return out;
}

std::vector<Mask> k_subset_masks(const Prime& p, u32 k) {
    std::vector<Mask> out;
    for (KSubsetStream s(p, k); !s.done(); s.advance()) {
        Mask m = 0;
        for (u32 x : s.current()) m |= Mask{1} << x;
        out.push_back(m);
    }
    return out;
}

bool is_orbit_minimum(Mask m, unsigned p) {
    for (unsigned lambda = 1; lambda < p; ++lambda)
        for (unsigned mu = 0; mu < p; ++mu)
            if (kernel::lex_less(kernel::affine(m, lambda, mu, p), m)) return false;
    return true;
}

// Every pair of k-subsets (as masks) whose restricted sumset has exactly
// `target` elements, together with the ordered-pair count covered.
std::pair<std::vector<std::pair<Mask, Mask>>, u64> scan_target(const Prime& prime, u32 k, u32 target,
                                                               const SweepConfig& config) {
    const unsigned p = prime.value();
    const std::vector<Mask> subsets = k_subset_masks(prime, k);
    const std::size_t n = subsets.size();
    using Hit = std::pair<Mask, Mask>;

    if (config.prune) {
        std::vector<Mask> reps;
        for (Mask m : subsets)
            if (is_orbit_minimum(m, p)) reps.push_back(m);
        auto hits = run_sharded<Hit>(reps.size(), config.workers, [&](std::size_t lo, std::size_t hi, auto& out) {
            for (std::size_t ia = lo; ia < hi; ++ia)
                for (Mask b : subsets)
                    if (kernel::restricted_size_capped(reps[ia], b, p, target) == target) out.emplace_back(reps[ia], b);
        });
        return {std::move(hits), static_cast<u64>(reps.size()) * n};
    }

    auto hits = run_sharded<Hit>(n, config.workers, [&](std::size_t lo, std::size_t hi, auto& out) {
        for (std::size_t ia = lo; ia < hi; ++ia)
            for (std::size_t ib = ia; ib < n; ++ib)
                if (kernel::restricted_size_capped(subsets[ia], subsets[ib], p, target) == target)
                    out.emplace_back(subsets[ia], subsets[ib]);
    });
    // unordered scan; each off-diagonal pair stands for two ordered pairs
    return {std::move(hits), static_cast<u64>(n) * n};
}

std::vector<PairRecord> classify_hits(const Prime& prime, const std::vector<std::pair<Mask, Mask>>& hits) {
    std::map<std::pair<std::vector<u32>, std::vector<u32>>, PairRecord> classes;
    std::map<std::pair<Mask, Mask>, bool> seen;
    for (const auto& [ma, mb] : hits) {
        // (A, B) and (B, A) share a class; skip exact repeats cheaply.
        if (!seen.emplace(std::minmax(ma, mb), true).second) continue;
        auto [ka, kb] = class_key(FpSet::from_mask(prime, ma), FpSet::from_mask(prime, mb));
        auto key = std::pair(ka.elements(), kb.elements());
        if (!classes.count(key)) classes.emplace(std::move(key), make_pair_record(ka, kb));
    }
    std::vector<PairRecord> out;
    for (auto& [key, rec] : classes) out.push_back(std::move(rec));
    return out;
}

template <class F>
SweepReport timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    SweepReport r = f();
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

} // namespace

SweepReport verify_main_theorem(const Prime& p, u32 k, const SweepConfig& config) {
    return timed([&] {
        if (k == 0 || k > p.value())
            throw Error(ErrorCode::KTooLarge, "need 1 <= k <= p (k = " + std::to_string(k) + ")");
        checked_ceiling(p, config, kDefaultTheoremCeiling);
        SweepReport r;
        r.kind = SweepKind::main;
        r.p = p.value();
        r.k = k;
        r.target = config.target.value_or(2 * k - 2);
        r.pruned = config.prune;
        const bool k_ok = k >= 5, p_abstract = p.value() > 2 * k - 2, p_proof = p.value() > 2 * k - 1;
        r.hypotheses = {{"k_ge_5", k_ok}, {"p_gt_2k_minus_2", p_abstract}, {"p_gt_2k_minus_1", p_proof}};
        r.expectation_applies = k_ok && p_proof && r.target == 2 * k - 2;

        auto [hits, scanned] = scan_target(p, k, r.target, config);
        r.pairs_scanned = scanned;
        r.extremal = classify_hits(p, hits);
        for (const auto& rec : r.extremal)
            if (!rec.equal) r.counterexamples.push_back(rec);
        return r;
    });
}

SweepReport verify_karolyi_inverse(const Prime& p, u32 k, const SweepConfig& config) {
    return timed([&] {
        if (k < 2 || k > p.value())
            throw Error(ErrorCode::KTooLarge, "need 2 <= k <= p (k = " + std::to_string(k) + ")");
        checked_ceiling(p, config, kDefaultTheoremCeiling);
        SweepReport r;
        r.kind = SweepKind::karolyi;
        r.p = p.value();
        r.k = k;
        r.target = 2 * k - 3;
        r.pruned = config.prune;
        const bool k_ok = k >= 5, p_ok = p.value() > 2 * k - 3;
        r.hypotheses = {{"k_ge_5", k_ok}, {"p_gt_2k_minus_3", p_ok}};
        r.expectation_applies = k_ok && p_ok;

        auto [hits, scanned] = scan_target(p, k, r.target, config);
        r.pairs_scanned = scanned;
        r.extremal = classify_hits(p, hits);
        for (const auto& rec : r.extremal)
            if (!(rec.equal && is_arithmetic_progression(rec.a))) r.counterexamples.push_back(rec);

        std::map<std::vector<u32>, FpSet> progressions;
        for (u32 d = 1; d < p.value(); ++d)
            for (u32 start = 0; start < p.value(); ++start) {
                std::vector<i64> v;
                for (u32 t = 0; t < k; ++t) v.push_back(static_cast<i64>(start) + static_cast<i64>(t) * d);
                FpSet s(p, v);
                progressions.emplace(s.elements(), std::move(s));
            }
        for (const auto& [key, s] : progressions) {
            ++r.converse_checked;
            if (restricted_sumset(s, s).size() != r.target) r.converse_failures.push_back(s);
        }
        return r;
    });
}

SweepReport verify_bounds(const Prime& p, const SweepConfig& config) {
    return timed([&] {
        checked_ceiling(p, config, kDefaultBoundsCeiling);
        const unsigned pv = p.value();
        SweepReport r;
        r.kind = SweepKind::bounds;
        r.p = pv;
        r.expectation_applies = true;
        r.hypotheses = {};

        const Mask full = kernel::full_mask(pv);
        const std::size_t n = static_cast<std::size_t>(full); // nonempty masks 1..full
        struct Hit {
            Mask a, b;
            int which;
            unsigned observed, required;
        };
        auto hits = run_sharded<Hit>(n, config.workers, [&](std::size_t lo, std::size_t hi, auto& out) {
            for (std::size_t ia = lo; ia < hi; ++ia) {
                const Mask a = static_cast<Mask>(ia) + 1;
                const int k = std::popcount(a);
                for (Mask b = 1; b <= full; ++b) {
                    const int l = std::popcount(b);
                    const auto full_size = static_cast<unsigned>(std::popcount(kernel::sumset(a, b, pv)));
                    const auto restricted = static_cast<unsigned>(std::popcount(kernel::restricted_sumset(a, b, pv)));
                    const auto cd = static_cast<unsigned>(std::min<int>(pv, k + l - 1));
                    const auto eh = static_cast<unsigned>(std::max(0, std::min<int>(pv, k + l - 3)));
                    if (full_size < cd) out.push_back({a, b, 0, full_size, cd});
                    if (restricted < eh) out.push_back({a, b, 1, restricted, eh});
                    if (a == b) {
                        const auto dsh = static_cast<unsigned>(std::max(0, std::min<int>(pv, 2 * k - 3)));
                        if (restricted < dsh) out.push_back({a, b, 2, restricted, dsh});
                    }
                }
            }
        });
        r.pairs_scanned = static_cast<u64>(n) * n;
        static constexpr const char* names[] = {"cauchy_davenport", "erdos_heilbronn", "dias_da_silva_hamidoune"};
        for (const auto& h : hits)
            r.violations.push_back(
                {FpSet::from_mask(p, h.a), FpSet::from_mask(p, h.b), names[h.which], h.observed, h.required});
        return r;
    });
}

bool reverify_counterexamples(const SweepReport& report) {
    for (const auto& rec : report.counterexamples) {
        if (rec.a.size() != report.k || rec.b.size() != report.k) return false;
        if (restricted_sumset(rec.a, rec.b).size() != report.target) return false;
        switch (report.kind) {
        case SweepKind::main:
            if (rec.a == rec.b) return false;
            break;
        case SweepKind::karolyi:
            if (rec.a == rec.b && is_arithmetic_progression(rec.a)) return false;
            break;
        case SweepKind::bounds: return false;
        }
    }
    for (const auto& v : report.violations) {
        const std::size_t observed = v.bound == "cauchy_davenport" ? sumset(v.a, v.b).size()
                                                                   : restricted_sumset(v.a, v.b).size();
        if (observed != v.observed || observed >= v.required) return false;
    }
    return true;
}

std::vector<AuditTrace> audit_all_extremal(const Prime& p, u32 k, const SweepConfig& config) {
    SweepConfig main_config = config;
    main_config.target.reset();
    const SweepReport report = verify_main_theorem(p, k, main_config);
    std::vector<AuditTrace> traces;
    for (const auto& rec : report.extremal) traces.push_back(audit_sigma_chain(rec.a, rec.b));
    return traces;
}

// ----------------------------------------------------------------- JSON

namespace {

using Json = nlohmann::ordered_json;

Json set_json(const FpSet& s) { return Json(s.elements()); }

Json record_json(const PairRecord& rec) {
    Json j;
    j["A"] = set_json(rec.a);
    j["B"] = set_json(rec.b);
    j["k"] = rec.k;
    j["restricted_size"] = rec.restricted_size;
    Json labels = Json::array();
    for (auto l : rec.labels) labels.push_back(std::string(to_string(l)));
    j["labels"] = labels;
    j["equal"] = rec.equal;
    if (rec.ap)
        j["ap"] = Json{{"start", rec.ap->start.residue()}, {"diff", rec.ap->diff.residue()}, {"length", rec.ap->length}};
    else
        j["ap"] = nullptr;
    return j;
}

} // namespace

std::string render_report_json(const SweepReport& r) {
    Json j;
    j["kind"] = std::string(to_string(r.kind));
    j["p"] = r.p;
    if (r.kind != SweepKind::bounds) {
        j["k"] = r.k;
        j["target"] = r.target;
        j["pruned"] = r.pruned;
    }
    Json hyp = Json::object();
    for (const auto& [name, ok] : r.hypotheses) hyp[name] = ok;
    j["hypotheses"] = hyp;
    j["expectation_applies"] = r.expectation_applies;
    j["pairs_scanned"] = r.pairs_scanned;
    j["pairs_scanned_counts"] = "ordered pairs";

    if (r.kind == SweepKind::bounds) {
        std::map<std::string, std::size_t> counts{
            {"cauchy_davenport", 0}, {"dias_da_silva_hamidoune", 0}, {"erdos_heilbronn", 0}};
        for (const auto& v : r.violations) ++counts[v.bound];
        j["violation_counts"] = counts;
        Json list = Json::array();
        for (const auto& v : r.violations)
            list.push_back(Json{{"A", set_json(v.a)},
                                {"B", set_json(v.b)},
                                {"bound", v.bound},
                                {"observed", v.observed},
                                {"required", v.required}});
        j["violations"] = list;
    } else {
        j["extremal_classes"] = r.extremal.size();
        j["counterexample_count"] = r.counterexamples.size();
        Json ce = Json::array();
        for (const auto& rec : r.counterexamples) ce.push_back(record_json(rec));
        j["counterexamples"] = ce;
        if (r.kind == SweepKind::karolyi) {
            Json failures = Json::array();
            for (const auto& s : r.converse_failures) failures.push_back(set_json(s));
            j["converse"] = Json{{"progressions_checked", r.converse_checked}, {"failures", failures}};
        }
        Json ext = Json::array();
        for (const auto& rec : r.extremal) ext.push_back(record_json(rec));
        j["extremal_pairs"] = ext;
    }
    j["verdict"] = r.exception_count() == 0 ? "pass" : (r.expectation_applies ? "fail" : "recorded");
    return j.dump(2) + "\n";
}

} // namespace rsumset
