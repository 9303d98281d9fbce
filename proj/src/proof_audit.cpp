#include <rsumset/proof_audit.hpp>

#include <algorithm>
#include <sstream>

namespace rsumset {

namespace {

struct Ctx {
    const Prime& prime;
    u32 p;
    i64 k;
    const GridPair& g;
    std::vector<u32> sa, sb, sc;

    u32 A(i64 i, i64 j) const { return g.a.at(i, j); }
    u32 B(i64 i, i64 j) const { return g.b.at(i, j); }
    // coefficient of x^u y^v in h_A / h_B
    u32 ha(i64 u, i64 v) const { return u < 0 || v < 0 ? 0 : A(u + v, u); }
    u32 hb(i64 u, i64 v) const { return u < 0 || v < 0 ? 0 : B(u + v, v); }
    u32 C(i64 i, i64 j) const { return cij(static_cast<u32>(i), j, prime).residue(); }

    u32 add(u32 x, u32 y) const { return add_mod(x, y, p); }
    u32 sub(u32 x, u32 y) const { return sub_mod(x, y, p); }
    u32 mul(u32 x, u32 y) const { return mul_mod(x, y, p); }
    u32 neg(u32 x) const { return neg_mod(x, p); }
    // (-1)^n x
    u32 sgn(i64 n, u32 x) const { return n % 2 == 0 ? x : neg_mod(x, p); }
};

AuditRecord equality(int step, std::string label, u32 lhs, u32 rhs, std::string detail = {}) {
    return {step, std::move(label), lhs, rhs, lhs == rhs, true, std::move(detail)};
}

AuditRecord nonzero(int step, std::string label, u32 value, std::string detail = {}) {
    return {step, std::move(label), value, 0, value != 0, true, std::move(detail)};
}

std::string idx(const char* name, i64 v) { return std::string(name) + "=" + std::to_string(v); }

// Coefficient of x^a y^b in h_A g_A(x) + h_B g_B(y), split by its dependence
// on the unknowns sigma_i(A) and sigma_i(B): total = alpha*sA + beta*sB + gamma.
struct Linear {
    u32 alpha = 0, beta = 0, gamma = 0;
};

Linear expand_monomial(const Ctx& c, i64 i, i64 a, i64 b) {
    Linear out;
    for (i64 J = 0; J <= c.k; ++J) {
        const u32 from_a = c.sgn(J, c.ha(a - (c.k - J), b));
        const u32 from_b = c.sgn(J, c.hb(a, b - (c.k - J)));
        if (J == i) {
            out.alpha = c.add(out.alpha, from_a);
            out.beta = c.add(out.beta, from_b);
        } else {
            out.gamma = c.add(out.gamma, c.add(c.mul(c.sa[J], from_a), c.mul(c.sb[J], from_b)));
        }
    }
    return out;
}

} // namespace

bool AuditTrace::clean() const noexcept { return first_failure() == nullptr; }

const AuditRecord* AuditTrace::first_failure() const noexcept {
    for (const auto& r : records)
        if (r.gating && !r.pass) return &r;
    return nullptr;
}

GridPair extract_grids(const CnWitness& w, std::size_t k) {
    if (k == 0) throw Error(ErrorCode::IndexOutOfRange, "k must be positive");
    const int limit = static_cast<int>(k) - 1;
    if (w.h_a.total_degree() > limit || w.h_b.total_degree() > limit)
        throw Error(ErrorCode::DegreeTooHigh, "deg h_A = " + std::to_string(w.h_a.total_degree()) + ", deg h_B = " +
                                                  std::to_string(w.h_b.total_degree()) + ", limit k-1 = " +
                                                  std::to_string(limit));
    GridPair g{CoefficientGrid(k), CoefficientGrid(k)};
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            g.a.set(i, j, w.h_a.coeff(j, i - j));
            g.b.set(i, j, w.h_b.coeff(i - j, j));
        }
    return g;
}

std::vector<AuditRecord> audit_top_layer(const GridPair& grids, std::size_t k, const Prime& p) {
    std::vector<AuditRecord> out;
    const i64 kk = static_cast<i64>(k);
    for (i64 i = 0; i < kk; ++i) {
        const u32 a = grids.a.at(kk - 1, i);
        const u32 b = grids.b.at(kk - 1, i);
        out.push_back(equality(0, "top.A_eq_C", a, cij(static_cast<u32>(2 * kk - 1), kk + i, p).residue(),
                               idx("i", i)));
        out.push_back(equality(0, "top.B_eq_negA", b, neg_mod(a, p), idx("i", i)));
        out.push_back(nonzero(0, "top.nonzero", a, idx("i", i)));
    }
    return out;
}

AuditTrace audit_sigma_chain(const FpSet& a, const FpSet& b, const AuditOptions& options) {
    if (!(a.modulus() == b.modulus())) throw Error(ErrorCode::ModulusMismatch, "A and B use different moduli");
    const Prime& prime = a.modulus();
    const u32 p = prime.value();
    const std::size_t k = a.size();
    if (k < 2 || b.size() != k)
        throw Error(ErrorCode::HypothesisViolation, "need |A| = |B| = k >= 2 (got |A| = " + std::to_string(a.size()) +
                                                        ", |B| = " + std::to_string(b.size()) + ")");
    FpSet c = restricted_sumset(a, b);
    if (c.size() != 2 * k - 2)
        throw Error(ErrorCode::HypothesisViolation,
                    "need |A restricted+ B| = 2k-2 = " + std::to_string(2 * k - 2) + " (got " +
                        std::to_string(c.size()) + ")");
    if (p <= 2 * k - 2)
        throw Error(ErrorCode::HypothesisViolation,
                    "need p > 2k-2 = " + std::to_string(2 * k - 2) + " (got p = " + std::to_string(p) + ")");

    AuditTrace trace(a, b, c);
    trace.p = p;
    trace.k = k;
    if (p == 2 * k - 1)
        trace.warnings.push_back("p = 2k-1: the non-vanishing checks assume p > 2k-1 and are expected to fail");

    const BiPoly f = build_locus_poly(c);
    const CnWitness w = cn_decompose(f, a, b);
    const WitnessVerdict verdict = verify_witness(f, w);
    trace.records.push_back({0, "witness.verify", verdict.ok ? 1u : 0u, 1, verdict.ok, true, verdict.diagnostic});

    const GridPair grids = extract_grids(w, k);
    for (auto& r : audit_top_layer(grids, k, prime)) trace.records.push_back(std::move(r));

    const FpSet& sigma_source = options.sigma_source_override ? *options.sigma_source_override : c;
    Ctx x{prime, p, static_cast<i64>(k), grids, elementary_symmetric(a).values, elementary_symmetric(b).values,
          elementary_symmetric(sigma_source).values};
    x.sc.resize(std::max<std::size_t>(x.sc.size(), 2 * k - 1), 0);

    const i64 K = static_cast<i64>(k);
    std::vector<u32> recovered_b(k + 1, 0);
    recovered_b[0] = 1 % p;
    bool recovery_complete = true;

    for (i64 i = 1; i <= K; ++i) {
        const int step = static_cast<int>(i);
        StepSummary s;
        s.i = static_cast<u32>(i);
        s.even = i % 2 == 0;
        s.sigma_a = x.sa[i];
        s.sigma_b = x.sb[i];
        s.sigma_c = x.sc[i];
        auto& rec = trace.records;
        rec.push_back(equality(step, "sigma.equal", x.sa[i], x.sb[i]));

        // Monomials whose coefficients drive this step.
        std::vector<std::pair<i64, i64>> drivers;
        if (s.even) {
            const i64 r = i / 2;
            s.r = static_cast<u32>(r);
            drivers = {{K - r - 1, K - r}, {K - r, K - r - 1}};

            const u32 lhs_lo = x.mul(x.sc[i], x.C(2 * K - 2 * r - 1, K - r - 1));
            const u32 lhs_hi = x.mul(x.sc[i], x.C(2 * K - 2 * r - 1, K - r));
            u32 b_part_lo = 0, a_part_lo = 0, rhs_hi = 0;
            u32 rho = lhs_lo;
            for (i64 j = 0; j <= r; ++j) {
                const u32 t = x.sgn(r + j, x.mul(x.sb[r + j], x.B(K - r - 1 + j, j)));
                b_part_lo = x.add(b_part_lo, t);
                if (j <= r - 1) rho = x.sub(rho, t);
                rhs_hi = x.add(rhs_hi, x.sgn(r + j, x.mul(x.sa[r + j], x.A(K - r - 1 + j, j))));
            }
            for (i64 j = 0; j <= r - 1; ++j) {
                const u32 t = x.sgn(r + 1 + j, x.mul(x.sa[r + 1 + j], x.A(K - r + j, j)));
                a_part_lo = x.add(a_part_lo, t);
                if (j <= r - 2) rho = x.sub(rho, t);
                rhs_hi = x.add(rhs_hi, x.sgn(r + 1 + j, x.mul(x.sb[r + 1 + j], x.B(K - r + j, j))));
            }
            const std::string rr = idx("r", r);
            rec.push_back(equality(step, "even.identity.lo", lhs_lo, x.add(b_part_lo, a_part_lo), rr));
            rec.push_back(equality(step, "even.identity.hi", lhs_hi, rhs_hi, rr));

            const u32 b_r = x.B(K - 1, r), b_rm1 = x.B(K - 1, r - 1);
            s.rho = rho;
            rec.push_back(equality(step, "even.rho.lo", rho, x.sub(x.mul(x.sb[i], b_r), x.mul(x.sa[i], b_rm1)), rr));
            rec.push_back(
                equality(step, "even.rho.hi", x.neg(rho), x.sub(x.mul(x.sb[i], b_rm1), x.mul(x.sa[i], b_r)), rr));

            const u32 denom = x.add(b_rm1, b_r);
            s.pivot = denom;
            rec.push_back(equality(step, "even.combined", 0, x.mul(x.sub(x.sb[i], x.sa[i]), denom), rr));
            rec.push_back(nonzero(step, "even.denominator.nonzero", denom, rr));
            rec.push_back(equality(step, "even.denominator.cij", denom,
                                   x.add(x.C(2 * K - 1, K - r), x.C(2 * K - 1, K - r - 1)), rr));

            s.pivot_exact = even_denominator_direct(static_cast<u32>(K), static_cast<u32>(r));
            s.pivot_closed_form = even_denominator_closed_form(static_cast<u32>(K), static_cast<u32>(r));
        } else {
            const i64 r = (i - 1) / 2;
            s.r = static_cast<u32>(r);
            drivers = {{K - r - 1, K - r - 1}};

            const u32 mid = x.C(2 * K - 2 * r - 2, K - r - 1);
            const u32 lhs = x.sgn(i, x.mul(x.sc[i], mid));
            u32 rhs = 0;
            for (i64 j = 0; j <= r; ++j) {
                const u32 t = x.add(x.mul(x.sa[r + 1 + j], x.A(K - r - 1 + j, j)),
                                    x.mul(x.sb[r + 1 + j], x.B(K - r - 1 + j, j)));
                rhs = x.add(rhs, x.sgn(r + 1 + j, t));
            }
            const std::string rr = idx("r", r);
            rec.push_back(equality(step, "odd.middle_zero", mid, 0, rr));
            rec.push_back(equality(step, "odd.identity", lhs, rhs, rr));

            const u32 pivot = x.B(K - 1, r);
            s.pivot = pivot;
            rec.push_back(equality(step, "odd.combined", 0, x.mul(x.sub(x.sb[i], x.sa[i]), pivot), rr));
            rec.push_back(nonzero(step, "odd.pivot.nonzero", pivot, rr));
            rec.push_back(equality(step, "odd.pivot.cij", pivot, x.C(2 * K - 1, K - r - 1), rr));

            s.pivot_exact = odd_pivot_direct(static_cast<u32>(K), static_cast<u32>(r));
            s.pivot_closed_form = odd_pivot_closed_form(static_cast<u32>(K), static_cast<u32>(r));
        }

        s.pivot_closed_form_mod_p = reduce_rational(s.pivot_closed_form, p);
        s.closed_form_agrees = BigRational(s.pivot_exact) == s.pivot_closed_form;
        {
            AuditRecord cf{step,
                           s.even ? "even.denominator.closed_form" : "odd.pivot.closed_form",
                           reduce_integer(s.pivot_exact, p),
                           s.pivot_closed_form_mod_p.value_or(0),
                           s.closed_form_agrees,
                           s.even,
                           "direct=" + s.pivot_exact.str() + " closed_form=" + to_string(s.pivot_closed_form)};
            trace.records.push_back(std::move(cf));
        }

        // Solve the driving identity for one sigma given the other.
        Linear lin;
        u32 target = 0;
        for (auto [ma, mb] : drivers) {
            const Linear l = expand_monomial(x, i, ma, mb);
            lin.alpha = x.add(lin.alpha, l.alpha);
            lin.beta = x.add(lin.beta, l.beta);
            lin.gamma = x.add(lin.gamma, l.gamma);
            target = x.add(target, x.sgn(i, x.mul(x.sc[i], x.C(2 * K - 1 - i, ma))));
        }
        const u32 free_term = x.sub(target, lin.gamma);
        if (lin.beta != 0)
            s.recovered_sigma_b = x.mul(x.sub(free_term, x.mul(lin.alpha, x.sa[i])), inverse_mod(lin.beta, p));
        if (lin.alpha != 0)
            s.recovered_sigma_a = x.mul(x.sub(free_term, x.mul(lin.beta, x.sb[i])), inverse_mod(lin.alpha, p));
        trace.records.push_back({step, "recover.sigma_b", s.recovered_sigma_b.value_or(0), x.sb[i],
                                 s.recovered_sigma_b == x.sb[i], true,
                                 s.recovered_sigma_b ? "" : "sigma_B coefficient vanishes"});
        trace.records.push_back({step, "recover.sigma_a", s.recovered_sigma_a.value_or(0), x.sa[i],
                                 s.recovered_sigma_a == x.sa[i], true,
                                 s.recovered_sigma_a ? "" : "sigma_A coefficient vanishes"});
        if (s.recovered_sigma_b)
            recovered_b[i] = *s.recovered_sigma_b;
        else
            recovery_complete = false;

        // Row k-i-1 of both grids, read off the monomials x^(k+l) y^(k-i-1-l)
        // and x^(k-i-1-l) y^(k+l), which only one of h_A, h_B can reach.
        const i64 row = K - i - 1;
        for (i64 l = 0; l <= row; ++l) {
            u32 sum_a = 0, sum_b = 0;
            for (i64 J = 0; J <= i; ++J) {
                sum_a = x.add(sum_a, x.sgn(J, x.mul(x.sa[J], x.A(row + J, l + J))));
                sum_b = x.add(sum_b, x.sgn(J, x.mul(x.sb[J], x.B(row + J, l + J))));
            }
            const std::string ll = idx("l", l);
            trace.records.push_back(
                equality(step, "tail.identity.A", x.sgn(i, x.mul(x.sc[i], x.C(2 * K - i - 1, K + l))), sum_a, ll));
            trace.records.push_back(equality(step, "tail.identity.B",
                                             x.sgn(i, x.mul(x.sc[i], x.C(2 * K - i - 1, K - i - 1 - l))), sum_b, ll));
            trace.records.push_back(equality(step, "tail.antisymmetry", x.A(row, l), x.neg(x.B(row, l)), ll));
        }

        trace.steps.push_back(std::move(s));
    }

    const int final_step = static_cast<int>(k) + 1;
    std::size_t matching = 0;
    for (std::size_t i = 0; i <= k; ++i) matching += x.sa[i] == x.sb[i] ? 1 : 0;
    trace.records.push_back(equality(final_step, "final.sigma_profile", static_cast<u32>(matching),
                                     static_cast<u32>(k + 1)));
    const bool same_g = vanishing_polynomial(a) == vanishing_polynomial(b);
    trace.records.push_back(equality(final_step, "final.vanishing_poly", same_g ? 1 : 0, 1));

    std::string roots_detail;
    bool roots_ok = false;
    if (!recovery_complete) {
        roots_detail = "recovered profile incomplete";
    } else {
        try {
            const FpSet roots = reconstruct_from_sigmas(SymmetricProfile{prime, recovered_b}, prime);
            roots_ok = roots == a;
            roots_detail = "roots=" + roots.to_string();
        } catch (const Error& e) {
            roots_detail = e.what();
        }
    }
    trace.records.push_back({final_step, "final.roots", roots_ok ? 1u : 0u, 1, roots_ok, true, roots_detail});
    trace.records.push_back(equality(final_step, "final.sets_equal", a == b ? 1 : 0, 1));
    return trace;
}

FpSet reconstruct_from_sigmas(const SymmetricProfile& profile, const Prime& p) {
    if (profile.values.empty()) throw Error(ErrorCode::IndexOutOfRange, "empty profile");
    const std::size_t k = profile.values.size() - 1;
    std::vector<i64> coeffs(k + 1, 0);
    for (std::size_t i = 0; i <= k; ++i) {
        const u32 v = profile.values[i] % p.value();
        coeffs[k - i] = i % 2 == 0 ? v : neg_mod(v, p.value());
    }
    coeffs[k] = 1;
    const UniPoly q(p, std::move(coeffs));
    FpSet roots = roots_over_fp(q);
    if (roots.size() < k)
        throw Error(ErrorCode::NotSplitting, "only " + std::to_string(roots.size()) + " distinct roots for degree " +
                                                 std::to_string(k));
    return roots;
}

std::string serialize_trace(const AuditTrace& trace) {
    std::ostringstream os;
    for (const auto& r : trace.records) {
        os << "step=" << r.step << " label=" << r.label << " lhs=" << r.lhs << " rhs=" << r.rhs
           << " pass=" << (r.pass ? 1 : 0) << " gating=" << (r.gating ? 1 : 0);
        if (!r.detail.empty()) os << " detail=\"" << r.detail << '"';
        os << '\n';
    }
    return os.str();
}

} // namespace rsumset
