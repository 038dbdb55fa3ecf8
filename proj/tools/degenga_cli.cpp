// degenga: exact computational kernel for degenerate Clifford geometric
// algebras G(p,q,r) with membership tests for the parity- and
// subspace-preserving unit groups, their Lie algebras, verification suites,
// and a per-signature atlas.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "degenga/expr.hpp"
#include "degenga/groups.hpp"
#include "degenga/lie.hpp"
#include "degenga/matrix_rep.hpp"
#include "degenga/multivector.hpp"
#include "degenga/verify.hpp"

#ifndef DEGENGA_DATA_DIR
#define DEGENGA_DATA_DIR "data"
#endif

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

dga::GroupId parse_group_name(const std::string& name, const dga::Signature& sig) {
    using dga::GroupKind;
    static const std::vector<std::pair<std::string, dga::GroupId>> table = {
        {"P_pm", {GroupKind::Ppm}},
        {"P", {GroupKind::P}},
        {"P_pm_Lambda", {GroupKind::PpmLambda}},
        {"P_Lambda", {GroupKind::PLambda}},
        {"P_pm_rad", {GroupKind::PpmRad}},
        {"Gamma_parity_0", {GroupKind::GammaParity, 0}},
        {"Gamma_parity_1", {GroupKind::GammaParity, 1}},
        {"Gamma_check_parity_0", {GroupKind::GammaCheckParity, 0}},
        {"Gamma_check_parity_1", {GroupKind::GammaCheckParity, 1}},
        {"Gamma_0n", {GroupKind::Gamma0n}},
        {"Gamma_check_0n", {GroupKind::GammaCheck0n}},
        {"Gamma_n", {GroupKind::GammaN}},
        {"Gamma_check_n", {GroupKind::GammaCheckN}},
        {"units", {GroupKind::Units}},
        {"full_units", {GroupKind::Units}},
    };
    for (const auto& [key, id] : table)
        if (key == name) return id;
    // numeric grade forms Gamma_<k> and Gamma_check_<k>
    auto numeric_tail = [&](const std::string& prefix) -> std::optional<int> {
        if (name.rfind(prefix, 0) != 0) return std::nullopt;
        std::string tail = name.substr(prefix.size());
        if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        return std::stoi(tail);
    };
    bool twisted = false;
    std::optional<int> k = numeric_tail("Gamma_");
    if (auto kc = numeric_tail("Gamma_check_")) {
        twisted = true;
        k = kc;
    }
    if (k) {
        if (*k == 0) return {twisted ? GroupKind::GammaCheck0 : GroupKind::Gamma0};
        if (*k == sig.n()) return {twisted ? GroupKind::GammaCheckN : GroupKind::GammaN};
        throw UsageError("unsupported group '" + name +
                         "': grade-preservation groups for 0 < k < n behave differently; see the "
                         "'counterexample' subcommand");
    }
    throw UsageError("unknown group '" + name + "'");
}

struct EvalOptions {
    std::string expr;
    std::string sig_text;
    bool hat = false;
    bool inv = false;
    bool even = false;
    bool odd = false;
    int grade = -1;
};

template <class F>
int run_eval(const EvalOptions& o) {
    dga::Signature sig = dga::parse_signature(o.sig_text);
    auto parsed = dga::parse<F>(o.expr, sig);
    if (!parsed.ok()) {
        std::cerr << "parse error at position " << parsed.error_pos << ": " << parsed.error
                  << "\n";
        return kExitUsage;
    }
    dga::Multivector<F> u = *parsed.value;
    if (o.hat) u = u.grade_involution();
    else if (o.even) u = u.parity_split().first;
    else if (o.odd) u = u.parity_split().second;
    else if (o.grade >= 0) {
        if (o.grade > sig.n()) {
            std::cerr << "grade " << o.grade << " out of range 0.." << sig.n() << "\n";
            return kExitUsage;
        }
        u = u.grade_project(o.grade);
    } else if (o.inv) {
        auto v = dga::inverse(u);
        if (!v) {
            std::cout << "not invertible\n";
            return kExitOk;
        }
        u = *v;
    }
    std::cout << dga::to_string(u) << "\n";
    return kExitOk;
}

struct MemberOptions {
    std::string expr;
    std::string sig_text;
    std::string group;
};

template <class F>
int run_member(const MemberOptions& o) {
    dga::Signature sig = dga::parse_signature(o.sig_text);
    dga::GroupId id = parse_group_name(o.group, sig);
    auto parsed = dga::parse<F>(o.expr, sig);
    if (!parsed.ok()) {
        std::cerr << "parse error at position " << parsed.error_pos << ": " << parsed.error
                  << "\n";
        return kExitUsage;
    }
    auto report = dga::group_member(id, *parsed.value);
    std::cout << (report.member ? "member" : "non-member");
    if (report.witness) std::cout << " witness = " << dga::to_string(*report.witness);
    if (report.violation)
        std::cout << " violation: " << dga::blade_name(report.violation->first, sig) << " -> "
                  << dga::to_string(report.violation->second);
    if (!report.member && !report.witness && !report.violation)
        std::cout << " (not invertible)";
    std::cout << "\n";
    return report.member ? kExitOk : kExitClaimFailed;
}

struct SuiteSelection {
    bool lemmas = false;
    bool theorems = false;
    bool lie = false;
    bool matrix = false;
};

struct VerifyCliOptions {
    std::vector<std::string> sig_texts;
    int max_n = 3;
    std::string suite = "all";
    int samples = 200;
    std::uint64_t seed = 42;
    long coeff_bound = 5;
    std::string format = "human";
    std::string data_dir = DEGENGA_DATA_DIR;
};

std::vector<dga::Signature> resolve_signatures(const VerifyCliOptions& o) {
    if (!o.sig_texts.empty()) {
        std::vector<dga::Signature> sigs;
        for (const auto& t : o.sig_texts) sigs.push_back(dga::parse_signature(t));
        return sigs;
    }
    return dga::signatures_up_to(o.max_n);
}

template <class F>
std::vector<dga::ClaimResult> collect_claims(const VerifyCliOptions& o,
                                             const SuiteSelection& sel) {
    dga::VerifyOptions opt;
    opt.samples = o.samples;
    opt.seed = o.seed;
    opt.coeff_bound = o.coeff_bound;
    std::vector<dga::ClaimResult> claims;
    auto sigs = resolve_signatures(o);
    for (const auto& sig : sigs) {
        if (sel.lemmas) dga::run_lemma_suite<F>(sig, opt, claims);
        if (sel.theorems) dga::run_theorem_suite<F>(sig, opt, claims);
        if (sel.lie) dga::run_lie_suite<F>(sig, opt, claims);
        if (sel.matrix) dga::run_embedding_suite(sig, opt, claims);
    }
    if (sel.matrix) {
        auto configs = dga::load_matrix_reps_file(o.data_dir + "/matrix_reps.txt");
        dga::run_matrix_example_suite(configs, opt, claims);
    }
    return claims;
}

int emit_claims(const std::vector<dga::ClaimResult>& claims, const std::string& format,
                double elapsed_ms) {
    int failed = 0;
    for (const auto& c : claims)
        if (!c.pass) ++failed;
    if (format == "jsonl") {
        for (const auto& c : claims) {
            ordered_json j;
            j["suite"] = c.suite;
            j["claim"] = c.claim;
            j["signature"] = c.sig.str();
            j["status"] = c.pass ? "pass" : "fail";
            if (!c.pass) j["witness"] = c.detail;
            std::cout << j.dump() << "\n";
        }
    } else {
        for (const auto& c : claims) {
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.suite << "/" << c.claim
                      << " sig=" << c.sig.str();
            if (!c.pass && !c.detail.empty()) std::cout << " :: " << c.detail;
            std::cout << "\n";
        }
        std::cout << claims.size() - failed << "/" << claims.size() << " claims passed in "
                  << static_cast<long>(elapsed_ms) << " ms\n";
    }
    return failed == 0 ? kExitOk : kExitClaimFailed;
}

template <class F>
int run_verify(const VerifyCliOptions& o) {
    SuiteSelection sel;
    if (o.suite == "all") {
        sel = {true, true, true, true};
    } else if (o.suite == "lemmas") {
        sel.lemmas = true;
    } else if (o.suite == "theorems") {
        sel.theorems = true;
    } else if (o.suite == "lie") {
        sel.lie = true;
    } else if (o.suite == "matrix") {
        sel.matrix = true;
    } else {
        throw UsageError("unknown suite '" + o.suite + "'");
    }
    auto start = std::chrono::steady_clock::now();
    auto claims = collect_claims<F>(o, sel);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
    return emit_claims(claims, o.format, ms);
}

struct AtlasCliOptions {
    int max_n = 3;
    std::vector<std::string> sig_texts;
    std::string out_path;
    int samples = 200;
    std::uint64_t seed = 42;
    long coeff_bound = 5;
};

ordered_json atlas_json(const dga::AtlasRow& row) {
    ordered_json j;
    j["signature"] = row.sig.str();
    j["n"] = row.sig.n();
    j["coincidence_classes"] = row.coincidence_classes;
    ordered_json dims;
    for (const auto& [k, v] : row.lie_dims) dims[k] = v;
    j["lie_dims"] = dims;
    ordered_json gamma;
    for (const auto& [k, v] : row.gamma_ids) gamma[k] = v;
    j["gamma_ids"] = gamma;
    j["sampling_consistent"] = row.sampling_consistent;
    if (!row.note.empty()) j["note"] = row.note;
    return j;
}

template <class F>
int run_atlas(const AtlasCliOptions& o) {
    dga::VerifyOptions opt;
    opt.samples = o.samples;
    opt.seed = o.seed;
    opt.coeff_bound = o.coeff_bound;
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!o.out_path.empty()) {
        file.open(o.out_path);
        if (!file) {
            std::cerr << "cannot write to " << o.out_path << "\n";
            return kExitUsage;
        }
        out = &file;
    }
    std::vector<dga::Signature> sigs;
    if (!o.sig_texts.empty())
        for (const auto& t : o.sig_texts) sigs.push_back(dga::parse_signature(t));
    else
        sigs = dga::signatures_up_to(o.max_n);
    bool consistent = true;
    for (const auto& sig : sigs) {
        auto row = dga::compute_atlas_row<F>(sig, opt);
        consistent = consistent && row.sampling_consistent;
        (*out) << atlas_json(row).dump() << "\n";
    }
    return consistent ? kExitOk : kExitClaimFailed;
}

template <class F>
int run_counterexample(const std::string& sig_text) {
    dga::Signature sig = dga::parse_signature(sig_text);
    auto report = dga::counterexample_check<F>(sig);
    std::cout << "T = " << dga::to_string(report.t) << " in G(" << sig.str() << ")\n";
    auto line = [&](const std::string& text, bool ok) {
        std::cout << "  " << text << "  [" << (ok ? "ok" : "UNEXPECTED") << "]\n";
    };
    std::string w1 = report.gamma1_violation
                         ? dga::blade_name(report.gamma1_violation->first, sig) + " -> " +
                               dga::to_string(report.gamma1_violation->second)
                         : "(none)";
    std::string w2 = report.gamma_check2_violation
                         ? dga::blade_name(report.gamma_check2_violation->first, sig) + " -> " +
                               dga::to_string(report.gamma_check2_violation->second)
                         : "(none)";
    line("T not in Gamma^1, witness " + w1, report.not_in_gamma1);
    line("T in Gamma^2", report.in_gamma2);
    line("T in Gamma-check^1", report.in_gamma_check1);
    line("T not in Gamma-check^2, witness " + w2, report.not_in_gamma_check2);
    return report.all_as_expected() ? kExitOk : kExitClaimFailed;
}

int run_matrix_cmd(const std::string& data_dir, int samples, std::uint64_t seed, long bound,
                   const std::string& format) {
    dga::VerifyOptions opt;
    opt.samples = samples;
    opt.seed = seed;
    opt.coeff_bound = bound;
    std::vector<dga::ClaimResult> claims;
    auto configs = dga::load_matrix_reps_file(data_dir + "/matrix_reps.txt");
    for (const auto& cfg : configs) dga::run_embedding_suite(cfg.source, opt, claims);
    dga::run_matrix_example_suite(configs, opt, claims);
    return emit_claims(claims, format, 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact kernel and verification suites for degenerate geometric algebras"};
    app.require_subcommand(1);
    bool complex_mode = false;
    app.add_flag("--complex", complex_mode, "Gaussian-rational scalars")
        ->envname("DEGENGA_COMPLEX");

    EvalOptions eval_opts;
    auto* eval = app.add_subcommand("eval", "evaluate a multivector expression");
    eval->add_option("expr", eval_opts.expr, "expression")->required();
    eval->add_option("--sig", eval_opts.sig_text, "signature p,q,r")
        ->required()
        ->envname("DEGENGA_SIG");
    auto* f_hat = eval->add_flag("--hat", eval_opts.hat, "grade involution");
    auto* f_inv = eval->add_flag("--inv", eval_opts.inv, "inverse");
    auto* f_even = eval->add_flag("--even", eval_opts.even, "even part");
    auto* f_odd = eval->add_flag("--odd", eval_opts.odd, "odd part");
    auto* f_grade = eval->add_option("--grade", eval_opts.grade, "grade projection");
    f_hat->excludes(f_inv)->excludes(f_even)->excludes(f_odd)->excludes(f_grade);
    f_inv->excludes(f_even)->excludes(f_odd)->excludes(f_grade);
    f_even->excludes(f_odd)->excludes(f_grade);
    f_odd->excludes(f_grade);

    MemberOptions member_opts;
    auto* member = app.add_subcommand("member", "group membership query");
    member->add_option("expr", member_opts.expr, "expression")->required();
    member->add_option("--sig", member_opts.sig_text, "signature p,q,r")
        ->required()
        ->envname("DEGENGA_SIG");
    member->add_option("--group", member_opts.group, "group name")
        ->required()
        ->envname("DEGENGA_GROUP");

    VerifyCliOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--sig", verify_opts.sig_texts, "signatures p,q,r (repeatable)")
        ->envname("DEGENGA_SIG");
    verify->add_option("--max-n", verify_opts.max_n, "run all signatures with n <= K")
        ->envname("DEGENGA_MAX_N");
    verify->add_option("--suite", verify_opts.suite, "lemmas|theorems|lie|matrix|all")
        ->envname("DEGENGA_SUITE");
    verify->add_option("--samples", verify_opts.samples, "samples per check")
        ->envname("DEGENGA_SAMPLES");
    verify->add_option("--seed", verify_opts.seed, "rng seed")->envname("DEGENGA_SEED");
    verify->add_option("--coeff-bound", verify_opts.coeff_bound, "coefficient bound")
        ->envname("DEGENGA_COEFF_BOUND");
    verify->add_option("--format", verify_opts.format, "human|jsonl")
        ->envname("DEGENGA_FORMAT");
    verify->add_option("--data", verify_opts.data_dir, "data directory")
        ->envname("DEGENGA_DATA");

    AtlasCliOptions atlas_opts;
    auto* atlas = app.add_subcommand("atlas", "per-signature coincidence and dimension report");
    atlas->add_option("--max-n", atlas_opts.max_n, "signatures with n <= K")
        ->envname("DEGENGA_MAX_N");
    atlas->add_option("--sig", atlas_opts.sig_texts, "signatures p,q,r (repeatable)")
        ->envname("DEGENGA_SIG");
    atlas->add_option("--out", atlas_opts.out_path, "output path (default stdout)")
        ->envname("DEGENGA_OUT");
    atlas->add_option("--samples", atlas_opts.samples, "samples per check")
        ->envname("DEGENGA_SAMPLES");
    atlas->add_option("--seed", atlas_opts.seed, "rng seed")->envname("DEGENGA_SEED");
    atlas->add_option("--coeff-bound", atlas_opts.coeff_bound, "coefficient bound")
        ->envname("DEGENGA_COEFF_BOUND");

    std::string matrix_data = DEGENGA_DATA_DIR;
    int matrix_samples = 200;
    std::uint64_t matrix_seed = 42;
    long matrix_bound = 5;
    std::string matrix_format = "human";
    auto* matrix = app.add_subcommand("matrix", "structural checks of the matrix examples");
    matrix->add_option("--data", matrix_data, "data directory")->envname("DEGENGA_DATA");
    matrix->add_option("--samples", matrix_samples, "samples per check")
        ->envname("DEGENGA_SAMPLES");
    matrix->add_option("--seed", matrix_seed, "rng seed")->envname("DEGENGA_SEED");
    matrix->add_option("--coeff-bound", matrix_bound, "coefficient bound")
        ->envname("DEGENGA_COEFF_BOUND");
    matrix->add_option("--format", matrix_format, "human|jsonl")->envname("DEGENGA_FORMAT");

    std::string cx_sig = "0,0,3";
    auto* cx = app.add_subcommand("counterexample",
                                  "grade-preservation counterexample for T = e + e1");
    cx->add_option("--sig", cx_sig, "Grassmann signature 0,0,n with n >= 3")
        ->envname("DEGENGA_SIG");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (eval->parsed())
            return complex_mode ? run_eval<dga::GaussianRational>(eval_opts)
                                : run_eval<dga::Rational>(eval_opts);
        if (member->parsed())
            return complex_mode ? run_member<dga::GaussianRational>(member_opts)
                                : run_member<dga::Rational>(member_opts);
        if (verify->parsed())
            return complex_mode ? run_verify<dga::GaussianRational>(verify_opts)
                                : run_verify<dga::Rational>(verify_opts);
        if (atlas->parsed())
            return complex_mode ? run_atlas<dga::GaussianRational>(atlas_opts)
                                : run_atlas<dga::Rational>(atlas_opts);
        if (matrix->parsed())
            return run_matrix_cmd(matrix_data, matrix_samples, matrix_seed, matrix_bound,
                                  matrix_format);
        if (cx->parsed())
            return complex_mode ? run_counterexample<dga::GaussianRational>(cx_sig)
                                : run_counterexample<dga::Rational>(cx_sig);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
