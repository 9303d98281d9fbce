#include "cli.hpp"

#include <rsumset/enumeration.hpp>
#include <rsumset/nullstellensatz.hpp>
#include <rsumset/proof_audit.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace rsumset::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { human, records };

struct RunConfig {
    std::optional<u64> prime;
    std::optional<std::string> set_a, set_b;
    std::optional<u32> k;
    std::optional<u32> target;
    unsigned workers = 1;
    std::optional<std::string> out_path;
    Format format = Format::human;
    std::optional<u32> ceiling;

    // subcommand-specific
    std::optional<std::string> poly_path;
    bool show_closed_forms = false;
    std::string theorem;
    bool no_prune = false;
    u64 start = 0;
    std::optional<u64> limit;
};

struct Io {
    std::ostream& out;
    std::ostream& err;
};

// Thrown for missing or malformed user input (exit 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Prime require_prime(const RunConfig& c) {
    if (!c.prime) throw UsageError("missing -p/--prime");
    return Prime(*c.prime);
}

FpSet require_set(const std::optional<std::string>& literal, const char* flag, const Prime& p, Io io) {
    if (!literal) throw UsageError(std::string("missing ") + flag);
    ParsedSet parsed = parse_set_literal(*literal, p);
    for (const auto& w : parsed.warnings) io.err << "warning: " << flag << ": " << w << '\n';
    return std::move(parsed.set);
}

std::string braces(const FpSet& s) { return "{" + s.to_string() + "}"; }

Json labels_json(const std::vector<PairLabel>& labels) {
    Json arr = Json::array();
    for (auto l : labels) arr.push_back(std::string(to_string(l)));
    return arr;
}

Json terms_json(const BiPoly& f) {
    Json arr = Json::array();
    for (const auto& t : f.terms()) arr.push_back(Json::array({t.c, t.i, t.j}));
    return arr;
}

void print_poly(std::ostream& os, const char* name, const BiPoly& f) {
    os << name << ":\n";
    if (f.is_zero()) os << "  (zero)\n";
    for (const auto& t : f.terms()) os << "  " << t.c << ':' << t.i << ',' << t.j << '\n';
}

// ---------------------------------------------------------------- sumset

int cmd_sumset(const RunConfig& c, Io io) {
    const Prime p = require_prime(c);
    const FpSet a = require_set(c.set_a, "-A", p, io);
    const FpSet b = require_set(c.set_b, "-B", p, io);
    const FpSet full = sumset(a, b);
    const FpSet restricted = restricted_sumset(a, b);
    std::optional<PairClassification> cls;
    if (!a.empty() && !b.empty()) cls = classify_pair(a, b);

    if (c.format == Format::records) {
        Json j;
        j["record"] = "sumset";
        j["p"] = p.value();
        j["A"] = a.elements();
        j["B"] = b.elements();
        j["sumset"] = full.elements();
        j["sumset_size"] = full.size();
        j["restricted"] = restricted.elements();
        j["restricted_size"] = restricted.size();
        j["labels"] = cls ? labels_json(cls->labels) : Json::array();
        if (cls && cls->hamidoune_rodseth_holds) j["hamidoune_rodseth_holds"] = *cls->hamidoune_rodseth_holds;
        io.out << j.dump() << '\n';
        return kOk;
    }
    io.out << "p = " << p.value() << '\n'
           << "A = " << braces(a) << "  |A| = " << a.size() << '\n'
           << "B = " << braces(b) << "  |B| = " << b.size() << '\n'
           << "A+B = " << braces(full) << "  |A+B| = " << full.size() << '\n'
           << "A restricted+ B = " << braces(restricted) << "  |A restricted+ B| = " << restricted.size() << '\n';
    io.out << "labels:";
    if (cls)
        for (auto l : cls->labels) io.out << ' ' << to_string(l);
    io.out << '\n';
    if (cls && cls->hamidoune_rodseth_holds)
        io.out << "hamidoune-rodseth conclusion: " << (*cls->hamidoune_rodseth_holds ? "holds" : "fails") << '\n';
    return kOk;
}

// -------------------------------------------------------------------- cn

int cmd_cn(const RunConfig& c, Io io) {
    const Prime p = require_prime(c);
    const FpSet a = require_set(c.set_a, "-A", p, io);
    const FpSet b = require_set(c.set_b, "-B", p, io);
    if (a.empty() || b.empty()) throw UsageError("-A and -B must be nonempty");

    BiPoly f = build_locus_poly(restricted_sumset(a, b));
    if (c.poly_path) {
        std::ifstream in(*c.poly_path);
        if (!in) throw UsageError("cannot read " + *c.poly_path);
        std::stringstream buf;
        buf << in.rdbuf();
        f = parse_bipoly_text(buf.str(), p);
    }

    if (auto pt = find_nonvanishing_point(f, a, b)) {
        const u32 v = f.evaluate(pt->first, pt->second);
        if (c.format == Format::records) {
            Json j{{"record", "cn"}, {"p", p.value()}, {"verdict", "not_vanishing"},
                   {"point", Json::array({pt->first, pt->second})}, {"value", v}};
            io.out << j.dump() << '\n';
        } else {
            io.out << "f does not vanish on A x B: f(" << pt->first << ", " << pt->second << ") = " << v << '\n';
        }
        return kMathFailure;
    }

    const CnWitness w = cn_decompose(f, a, b);
    const WitnessVerdict verdict = verify_witness(f, w);
    if (c.format == Format::records) {
        Json j;
        j["record"] = "cn";
        j["p"] = p.value();
        j["deg_f"] = f.total_degree();
        j["deg_h_a"] = w.h_a.total_degree();
        j["bound_a"] = w.degree_bound_a;
        j["deg_h_b"] = w.h_b.total_degree();
        j["bound_b"] = w.degree_bound_b;
        j["h_a"] = terms_json(w.h_a);
        j["h_b"] = terms_json(w.h_b);
        j["verdict"] = verdict.ok ? "valid" : "invalid";
        if (!verdict.ok) j["diagnostic"] = verdict.diagnostic;
        io.out << j.dump() << '\n';
    } else {
        io.out << "p = " << p.value() << ", deg f = " << f.total_degree() << '\n';
        io.out << "deg h_A = " << w.h_a.total_degree() << " <= " << w.degree_bound_a << " = deg f - |A|\n";
        io.out << "deg h_B = " << w.h_b.total_degree() << " <= " << w.degree_bound_b << " = deg f - |B|\n";
        print_poly(io.out, "h_A", w.h_a);
        print_poly(io.out, "h_B", w.h_b);
        io.out << "verdict: " << (verdict.ok ? "valid" : "invalid (" + verdict.diagnostic + ")") << '\n';
    }
    return verdict.ok ? kOk : kMathFailure;
}

// ----------------------------------------------------------------- audit

int cmd_audit(const RunConfig& c, Io io) {
    const Prime p = require_prime(c);
    const FpSet a = require_set(c.set_a, "-A", p, io);
    const FpSet b = require_set(c.set_b, "-B", p, io);
    const AuditTrace trace = audit_sigma_chain(a, b);
    for (const auto& w : trace.warnings) io.err << "warning: " << w << '\n';

    if (c.format == Format::records) {
        for (const auto& r : trace.records) {
            Json j{{"record", "audit"}, {"step", r.step}, {"label", r.label}, {"lhs", r.lhs},
                   {"rhs", r.rhs},      {"pass", r.pass}, {"gating", r.gating}};
            if (!r.detail.empty()) j["detail"] = r.detail;
            io.out << j.dump() << '\n';
        }
        if (c.show_closed_forms)
            for (const auto& s : trace.steps) {
                Json j{{"record", "closed_form"},
                       {"step", s.i},
                       {"parity", s.even ? "even" : "odd"},
                       {"r", s.r},
                       {"direct", s.pivot_exact.str()},
                       {"closed_form", to_string(s.pivot_closed_form)},
                       {"agrees", s.closed_form_agrees},
                       {"direct_mod_p", s.pivot}};
                io.out << j.dump() << '\n';
            }
        io.out << Json{{"record", "audit_summary"}, {"p", p.value()}, {"k", trace.k}, {"clean", trace.clean()}}.dump()
               << '\n';
    } else {
        io.out << "audit p = " << p.value() << ", k = " << trace.k << ", A = " << braces(a) << ", B = " << braces(b)
               << ", C = " << braces(trace.c) << '\n';
        io.out << serialize_trace(trace);
        if (c.show_closed_forms) {
            io.out << "closed forms (direct vs closed form):\n";
            for (const auto& s : trace.steps)
                io.out << "  i=" << s.i << (s.even ? " even" : " odd") << " r=" << s.r << "  direct=" << s.pivot_exact
                       << "  closed_form=" << to_string(s.pivot_closed_form)
                       << (s.closed_form_agrees ? "  agree" : "  DISAGREE") << "  (mod p: " << s.pivot << ")\n";
        }
        if (const AuditRecord* bad = trace.first_failure())
            io.out << "trace dirty: first failure at step " << bad->step << ' ' << bad->label << '\n';
        else
            io.out << "trace clean\n";
    }
    return trace.clean() ? kOk : kMathFailure;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const RunConfig& c, Io io) {
    const Prime p = require_prime(c);
    SweepConfig sc;
    sc.workers = std::max(1u, c.workers);
    sc.prune = !c.no_prune;
    sc.ceiling = c.ceiling;
    sc.target = c.target;

    SweepReport report;
    if (c.theorem == "bounds") {
        report = verify_bounds(p, sc);
    } else {
        if (!c.k) throw UsageError("missing -k");
        report = c.theorem == "main" ? verify_main_theorem(p, *c.k, sc) : verify_karolyi_inverse(p, *c.k, sc);
    }

    std::string path = c.out_path.value_or("rsumset-" + c.theorem + "-p" + std::to_string(p.value()) +
                                           (report.kind == SweepKind::bounds ? "" : "-k" + std::to_string(*c.k)) +
                                           ".json");
    {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw UsageError("cannot write " + path);
        f << render_report_json(report);
    }

    const std::size_t exceptions = report.exception_count();
    const char* noun = report.kind == SweepKind::bounds ? "violations" : "counterexamples";
    const char* verdict = exceptions == 0 ? "pass" : (report.expectation_applies ? "fail" : "recorded");
    if (c.format == Format::records) {
        Json j{{"record", "verify"}, {"kind", c.theorem}, {"p", p.value()}};
        if (report.kind != SweepKind::bounds) j["k"] = report.k;
        j[noun] = exceptions;
        j["pairs_scanned"] = report.pairs_scanned;
        j["verdict"] = verdict;
        j["report"] = path;
        io.out << j.dump() << '\n';
    } else {
        io.out << c.theorem << " p=" << p.value();
        if (report.kind != SweepKind::bounds) io.out << " k=" << report.k;
        io.out << ": " << exceptions << ' ' << noun;
        if (report.kind != SweepKind::bounds) io.out << ", " << report.extremal.size() << " extremal classes";
        io.out << ", " << report.pairs_scanned << " ordered pairs, " << std::fixed << std::setprecision(2)
               << report.wall_seconds << " s [" << verdict << "]";
        if (exceptions > 0 && !report.expectation_applies) io.out << " (hypotheses unmet)";
        io.out << "\nreport: " << path << '\n';
    }
    return report.passed() ? kOk : kMathFailure;
}

// ------------------------------------------------------------- enumerate

int cmd_enumerate(const RunConfig& c, Io io) {
    const Prime p = require_prime(c);
    if (!c.k) throw UsageError("missing -k");
    u64 emitted = 0;
    for (KSubsetStream s(p, *c.k, c.start); !s.done() && (!c.limit || emitted < *c.limit); s.advance(), ++emitted) {
        if (c.format == Format::records)
            io.out << Json{{"record", "subset"}, {"index", s.index()}, {"set", s.current()}}.dump() << '\n';
        else
            io.out << s.index() << ": " << braces(s.current_set()) << '\n';
    }
    return kOk;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::HypothesisViolation: return kHypothesis;
    case ErrorCode::CeilingExceeded: return kResourceGuard;
    case ErrorCode::ParseError:
    case ErrorCode::NotPrime:
    case ErrorCode::KTooLarge:
    case ErrorCode::EmptySet: return kParseError;
    default: return kMathFailure;
    }
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Restricted sumsets over Z/pZ: sumsets, Nullstellensatz witnesses, proof audits, exhaustive sweeps",
                 "rsumset"};
    app.require_subcommand(1);
    RunConfig c;
    std::string format = "human";

    app.add_option("-p,--prime", c.prime, "prime modulus");
    app.add_option("-A", c.set_a, "set literal, e.g. 0,1,2,3,5");
    app.add_option("-B", c.set_b, "set literal");
    app.add_option("-k", c.k, "subset size");
    app.add_option("--target", c.target, "restricted-sumset size scanned by `verify main` (default 2k-2)");
    app.add_option("--workers", c.workers, "sweep worker threads")->check(CLI::PositiveNumber);
    app.add_option("--out", c.out_path, "report file written by `verify`");
    app.add_option("--format", format, "human | records")->check(CLI::IsMember({"human", "records"}));
    app.add_option("--ceiling", c.ceiling, "override the exhaustive-sweep ceiling on p");

    auto* sub_sumset = app.add_subcommand("sumset", "print A+B, the restricted sumset, and pair labels");
    auto* sub_cn = app.add_subcommand("cn", "Nullstellensatz witness for f on A x B");
    sub_cn->add_option("--poly", c.poly_path, "file with f in c:i,j format (default: locus polynomial)");
    auto* sub_audit = app.add_subcommand("audit", "replay the coefficient induction for (A, B)");
    sub_audit->add_flag("--show-closed-forms", c.show_closed_forms, "print direct vs closed-form values");
    auto* sub_verify = app.add_subcommand("verify", "exhaustive sweep: main | karolyi | bounds");
    sub_verify->add_option("theorem", c.theorem, "main | karolyi | bounds")
        ->required()
        ->check(CLI::IsMember({"main", "karolyi", "bounds"}));
    sub_verify->add_flag("--no-prune", c.no_prune, "scan every pair instead of affine orbit representatives");
    auto* sub_enum = app.add_subcommand("enumerate", "list k-subsets in lexicographic order");
    sub_enum->add_option("--start", c.start, "first index");
    sub_enum->add_option("--limit", c.limit, "maximum number of subsets");
    for (auto* s : {sub_sumset, sub_cn, sub_audit, sub_verify, sub_enum}) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }
    c.format = format == "records" ? Format::records : Format::human;

    Io io{out, err};
    try {
        if (sub_sumset->parsed()) return cmd_sumset(c, io);
        if (sub_cn->parsed()) return cmd_cn(c, io);
        if (sub_audit->parsed()) return cmd_audit(c, io);
        if (sub_verify->parsed()) return cmd_verify(c, io);
        if (sub_enum->parsed()) return cmd_enumerate(c, io);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    return kParseError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.push_back("rsumset");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace rsumset::cli
