#ifndef DEGENGA_VERIFY_HPP
#define DEGENGA_VERIFY_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "degenga/expr.hpp"
#include "degenga/groups.hpp"
#include "degenga/lie.hpp"
#include "degenga/matrix_rep.hpp"
#include "degenga/multivector.hpp"
#include "degenga/rng.hpp"
#include "degenga/subspaces.hpp"

namespace dga {

struct VerifyOptions {
    int samples = 200;
    std::uint64_t seed = 42;
    long coeff_bound = 5;
    double tangency_tolerance = 1e-9;
    int tangency_samples = 25;
};

struct ClaimResult {
    std::string suite;
    std::string claim;
    Signature sig{0, 0, 1};
    bool pass = true;
    std::string detail;  // counterexample witness or failure note, empty on pass
};

inline std::vector<Signature> signatures_up_to(int max_n) {
    std::vector<Signature> sigs;
    for (int n = 1; n <= max_n; ++n)
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q + p <= n; ++q) sigs.emplace_back(p, q, n - p - q);
    return sigs;
}

namespace verify_detail {

template <class F>
Rng claim_rng(const VerifyOptions& opt, const std::string& suite, const std::string& claim,
              Signature sig) {
    std::string tag = suite + "/" + claim + "/" + sig.str();
    if constexpr (FieldTraits<F>::is_complex) tag += "/complex";
    return Rng(derive_seed(opt.seed, tag));
}

inline bool same_blades(const std::vector<BladeMask>& a, const std::vector<BladeMask>& b) {
    return a == b;  // both are produced in ascending mask order
}

// Whether T fixes every basis blade under the representation.
template <class F>
bool fixes_all_blades(Rep rep, const Multivector<F>& t, const Multivector<F>& t_inv) {
    const Signature sig = t.signature();
    for (BladeMask m : all_blades(sig)) {
        auto b = Multivector<F>::blade(sig, m);
        if (adjoint_conjugate(rep, t, t_inv, b) != b) return false;
    }
    return true;
}

}  // namespace verify_detail

// ---------------------------------------------------------------------------
// Lemma suite: radical invertibility, kernels, commutants, dimensions.
// ---------------------------------------------------------------------------

template <class F>
void run_lemma_suite(Signature sig, const VerifyOptions& opt, std::vector<ClaimResult>& out) {
    const std::string suite = "lemmas";
    auto push = [&](const std::string& claim, bool pass, const std::string& detail = "") {
        out.push_back({suite, claim, sig, pass, pass ? "" : detail});
    };

    {
        auto rng = verify_detail::claim_rng<F>(opt, suite, "radical_perturbation_invertible", sig);
        auto rad_basis = subspace(sig, SubspaceKind::Rad).basis();
        bool ok = true;
        std::string detail;
        for (int i = 0; i < opt.samples && ok; ++i) {
            auto x = random_multivector<F>(rng, sig, opt.coeff_bound);
            auto y = random_in_span<F>(rng, sig, rad_basis, opt.coeff_bound);
            auto u = Multivector<F>::identity(sig) + x * y;
            if (!is_invertible(u)) {
                ok = false;
                detail = "e + x*y not invertible for x=" + to_string(x) + ", y=" + to_string(y);
            }
        }
        push("radical_perturbation_invertible", ok, detail);
    }

    {
        auto rng = verify_detail::claim_rng<F>(opt, suite, "grade0_radical_unit_criterion", sig);
        auto basis = subspace(sig, SubspaceKind::G0PlusRad).basis();
        bool ok = true;
        std::string detail;
        for (int i = 0; i < opt.samples && ok; ++i) {
            auto t = random_in_span<F>(rng, sig, basis, opt.coeff_bound);
            bool invertible = is_invertible(t);
            bool scalar_nonzero = !is_zero(t.coeff(0));
            if (invertible != scalar_nonzero) {
                ok = false;
                detail = "criterion fails for " + to_string(t);
            }
        }
        push("grade0_radical_unit_criterion", ok, detail);
    }

    for (Rep rep : {Rep::Adjoint, Rep::TwistedAdjoint}) {
        std::string claim =
            rep == Rep::Adjoint ? "kernel_ad_formula" : "kernel_twisted_ad_formula";
        auto rng = verify_detail::claim_rng<F>(opt, suite, claim, sig);
        SubspaceSpec spec = kernel_spec(rep, sig);
        bool ok = true;
        std::string detail;
        for (int i = 0; i < opt.samples / 2 && ok; ++i) {
            auto t = random_invertible_in<F>(rng, spec, opt.coeff_bound);
            if (!verify_detail::fixes_all_blades(rep, t, *inverse(t))) {
                ok = false;
                detail = "kernel-subspace unit moves a blade: " + to_string(t);
            }
        }
        for (int i = 0; i < opt.samples && ok; ++i) {
            auto t = random_invertible<F>(rng, sig, opt.coeff_bound);
            bool fixes = verify_detail::fixes_all_blades(rep, t, *inverse(t));
            bool in_spec = spec.contains(t);
            if (fixes != in_spec) {
                ok = false;
                detail = "fixed-point set differs from formula at " + to_string(t);
            }
        }
        push(claim, ok, detail);
    }

    {
        auto got = centralizer(CommutantKind::Twisted, subspace(sig, SubspaceKind::Grade, 1),
                               FieldTraits<F>::is_complex);
        bool ok = verify_detail::same_blades(got, subspace(sig, SubspaceKind::Lambda).basis());
        push("commutant_grade1_twisted", ok, "nullspace differs from Lambda");
    }
    {
        auto got = centralizer(CommutantKind::Plain, subspace(sig, SubspaceKind::Parity, 0),
                               FieldTraits<F>::is_complex);
        bool ok =
            verify_detail::same_blades(got, subspace(sig, SubspaceKind::LambdaPlusGn).basis());
        push("commutant_even_plain", ok, "nullspace differs from Lambda + G^n");
    }
    {
        auto got = centralizer(CommutantKind::Twisted, subspace(sig, SubspaceKind::Parity, 0),
                               FieldTraits<F>::is_complex);
        SubspaceSpec expected = subspace(sig, sig.n() % 2 == 1 ? SubspaceKind::LambdaEven
                                                               : SubspaceKind::LambdaEvenPlusGn);
        bool ok = verify_detail::same_blades(got, expected.basis());
        push("commutant_even_twisted", ok, "nullspace differs from " + expected.name());
    }

    {
        auto rng = verify_detail::claim_rng<F>(opt, suite, "odd_product_commutation", sig);
        auto lambda_basis = subspace(sig, SubspaceKind::Lambda).basis();
        auto grade1 = subspace(sig, SubspaceKind::Grade, 1).basis();
        bool ok = true;
        for (int i = 0; i < std::min(opt.samples, 50) && ok; ++i) {
            auto x = random_in_span<F>(rng, sig, lambda_basis, opt.coeff_bound);
            std::vector<std::vector<Multivector<F>>> products;
            for (int m : {1, 3, 5}) {
                std::vector<Multivector<F>> factors;
                for (int j = 0; j < m; ++j)
                    factors.push_back(random_in_span<F>(rng, sig, grade1, opt.coeff_bound));
                products.push_back(std::move(factors));
            }
            ok = odd_product_property_check(x, products);
        }
        push("odd_product_commutation", ok, "odd product fails to carry the relation");
    }

    {
        long n = sig.n();
        bool ok = subspace(sig, SubspaceKind::Rad).dimension() ==
                  std::size_t((1L << n) - (1L << (sig.p + sig.q)));
        push("radical_dimension", ok, "dim rad != 2^n - 2^(p+q)");
    }
    {
        bool ok = subspace(sig, SubspaceKind::Lambda).dimension() == std::size_t(1L << sig.r);
        push("lambda_dimension", ok, "dim Lambda != 2^r");
    }
    {
        long expected = (sig.r >= 1 ? (1L << (sig.r - 1)) : 1) + (sig.n() % 2 == 1 ? 1 : 0);
        bool ok = subspace(sig, SubspaceKind::Center).dimension() == std::size_t(expected);
        push("center_dimension", ok, "dim Z differs from the formula");
    }
}

// ---------------------------------------------------------------------------
// Theorem suite: the P/Gamma identities, the counterexample, the collapse
// remarks for Grassmann and non-degenerate signatures.
// ---------------------------------------------------------------------------

template <class F>
void run_theorem_suite(Signature sig, const VerifyOptions& opt, std::vector<ClaimResult>& out) {
    const std::string suite = "theorems";
    auto push = [&](const std::string& claim, bool pass, const std::string& detail = "") {
        out.push_back({suite, claim, sig, pass, pass ? "" : detail});
    };

    auto identity_claim = [&](const std::string& claim, GroupId lhs, GroupId rhs) {
        auto rng = verify_detail::claim_rng<F>(opt, suite, claim, sig);
        auto rep = verify_group_identity<F>(lhs, rhs, sig, opt.samples, rng, opt.coeff_bound);
        std::string detail = rep.discrepancy;
        if (rep.witness_element) detail += ": " + to_string(*rep.witness_element);
        push(claim, rep.ok, detail);
    };
    auto inclusion_claim = [&](const std::string& claim, GroupId lhs, GroupId rhs) {
        auto rng = verify_detail::claim_rng<F>(opt, suite, claim, sig);
        auto rep = verify_group_inclusion<F>(lhs, rhs, sig, opt.samples, rng, opt.coeff_bound);
        std::string detail = rep.discrepancy;
        if (rep.witness_element) detail += ": " + to_string(*rep.witness_element);
        push(claim, rep.ok, detail);
    };

    identity_claim("identity_P_Gamma_parity1", {GroupKind::P}, {GroupKind::GammaParity, 1});
    identity_claim("identity_P_Lambda_Gamma_parity0", {GroupKind::PLambda},
                   {GroupKind::GammaParity, 0});
    identity_claim("identity_P_pm_Gamma_check_parity0", {GroupKind::Ppm},
                   {GroupKind::GammaCheckParity, 0});
    identity_claim("identity_P_pm_Lambda_Gamma_check_parity1", {GroupKind::PpmLambda},
                   {GroupKind::GammaCheckParity, 1});
    inclusion_claim("inclusion_P_in_P_Lambda", {GroupKind::P}, {GroupKind::PLambda});
    inclusion_claim("inclusion_P_pm_in_P_pm_Lambda", {GroupKind::Ppm}, {GroupKind::PpmLambda});

    for (GroupKind gk : {GroupKind::Gamma0, GroupKind::GammaN, GroupKind::Gamma0n,
                         GroupKind::GammaCheck0, GroupKind::GammaCheckN,
                         GroupKind::GammaCheck0n}) {
        GroupId gamma{gk};
        GroupId resolved = resolve_to_p_family(gamma, sig);
        identity_claim("identity_" + gamma.name() + "_is_" + resolved.name(), gamma, resolved);
    }

    if (sig.p == 0 && sig.q == 0 && sig.n() >= 3) {
        auto report = counterexample_check<F>(sig);
        std::string g1_witness, gc2_witness;
        if (report.gamma1_violation)
            g1_witness = blade_name(report.gamma1_violation->first, sig) + " -> " +
                         to_string(report.gamma1_violation->second);
        if (report.gamma_check2_violation)
            gc2_witness = blade_name(report.gamma_check2_violation->first, sig) + " -> " +
                          to_string(report.gamma_check2_violation->second);
        push("counterexample_not_in_Gamma_1", report.not_in_gamma1, "T preserves grade 1");
        push("counterexample_in_Gamma_2", report.in_gamma2, "T moves a grade-2 blade");
        push("counterexample_in_Gamma_check_1", report.in_gamma_check1,
             "twisted action moves a grade-1 blade");
        push("counterexample_not_in_Gamma_check_2", report.not_in_gamma_check2,
             "twisted action preserves grade 2");
        // witnesses checked bit-exactly for G(0,0,3)
        if (sig == Signature(0, 0, 3)) {
            auto e2_image = parse<F>("e2 + 2*e12", sig).value;
            auto e23_image = parse<F>("e23 - 2*e123", sig).value;
            bool w1 = report.gamma1_violation && report.gamma1_violation->first == 2u &&
                      report.gamma1_violation->second == *e2_image;
            bool w2 = report.gamma_check2_violation &&
                      report.gamma_check2_violation->first == 6u &&
                      report.gamma_check2_violation->second == *e23_image;
            push("counterexample_witness_e2", w1, "got " + g1_witness);
            push("counterexample_witness_e23", w2, "got " + gc2_witness);
        }
    }

    if (sig.p == 0 && sig.q == 0) {
        auto rng = verify_detail::claim_rng<F>(opt, suite, "grassmann_collapse", sig);
        SubspaceSpec even_span = subspace(sig, SubspaceKind::Parity, 0);
        SubspaceSpec center_span = subspace(sig, SubspaceKind::Center);
        bool pm_ok = true, p_ok = true, upper_ok = true;
        for (int i = 0; i < opt.samples; ++i) {
            auto t = random_invertible<F>(rng, sig, opt.coeff_bound);
            auto t_inv = inverse(t);
            if (group_member<F>({GroupKind::Ppm}, t, t_inv).member != even_span.contains(t))
                pm_ok = false;
            if (group_member<F>({GroupKind::P}, t, t_inv).member != center_span.contains(t))
                p_ok = false;
            for (GroupKind upper :
                 {GroupKind::PpmLambda, GroupKind::PLambda, GroupKind::PpmRad})
                if (!group_member<F>({upper}, t, t_inv).member) upper_ok = false;
        }
        push("grassmann_P_pm_is_even_units", pm_ok, "P_pm differs from the even unit group");
        push("grassmann_P_is_central_units", p_ok, "P differs from the central unit group");
        push("grassmann_upper_groups_are_all_units", upper_ok,
             "an invertible element escapes the Lambda-type groups");
    }

    if (sig.r == 0) {
        auto rng = verify_detail::claim_rng<F>(opt, suite, "nondegenerate_collapse", sig);
        bool pm_ok = true, p_ok = true, all_ok = true;
        for (int i = 0; i < opt.samples; ++i) {
            auto t = random_invertible<F>(rng, sig, opt.coeff_bound);
            auto t_inv = inverse(t);
            bool in_pm = group_member<F>({GroupKind::Ppm}, t, t_inv).member;
            bool in_p = group_member<F>({GroupKind::P}, t, t_inv).member;
            if (in_pm != group_member<F>({GroupKind::PpmLambda}, t, t_inv).member) pm_ok = false;
            if (in_pm != group_member<F>({GroupKind::PpmRad}, t, t_inv).member) pm_ok = false;
            if (in_p != group_member<F>({GroupKind::PLambda}, t, t_inv).member) p_ok = false;
            if (sig.n() % 2 == 0 && in_pm != in_p) all_ok = false;
        }
        push("nondegenerate_collapse_pm_family", pm_ok, "P_pm family fails to collapse");
        push("nondegenerate_collapse_P_family", p_ok, "P family fails to collapse");
        if (sig.n() % 2 == 0)
            push("nondegenerate_collapse_all", all_ok, "groups do not all coincide for even n");
    }
}

// ---------------------------------------------------------------------------
// Lie suite: dimensions, closure, chains, collapse tables, tangency.
// ---------------------------------------------------------------------------

inline std::string lie_name(GroupKind kind) {
    switch (kind) {
        case GroupKind::Ppm: return "p_pm";
        case GroupKind::P: return "p";
        case GroupKind::PpmLambda: return "p_pm_Lambda";
        case GroupKind::PLambda: return "p_Lambda";
        case GroupKind::PpmRad: return "p_pm_rad";
        default: return "?";
    }
}

template <class F>
void run_lie_suite(Signature sig, const VerifyOptions& opt, std::vector<ClaimResult>& out) {
    const std::string suite = "lie";
    auto push = [&](const std::string& claim, bool pass, const std::string& detail = "") {
        out.push_back({suite, claim, sig, pass, pass ? "" : detail});
    };

    std::map<GroupKind, LieAlgebraSpec> algebras;
    for (GroupKind g : p_family_kinds()) algebras.emplace(g, lie_algebra_of(g, sig));

    for (GroupKind g : p_family_kinds()) {
        long expected = lie_dimension_formula(g, sig);
        long got = static_cast<long>(algebras.at(g).basis.size());
        push("dimension_" + lie_name(g), got == expected,
             "dim = " + std::to_string(got) + ", formula gives " + std::to_string(expected));
    }
    if (sig.n() <= 5) {
        for (GroupKind g : p_family_kinds())
            push("closure_" + lie_name(g), commutator_closed(algebras.at(g)),
                 "a commutator of basis blades escapes the span");
    }

    {
        auto subset = [](const std::vector<BladeMask>& a, const std::vector<BladeMask>& b) {
            return std::includes(b.begin(), b.end(), a.begin(), a.end());
        };
        bool ok = subset(algebras.at(GroupKind::Ppm).basis,
                         algebras.at(GroupKind::PpmLambda).basis) &&
                  subset(algebras.at(GroupKind::PpmLambda).basis,
                         algebras.at(GroupKind::PpmRad).basis) &&
                  subset(algebras.at(GroupKind::Ppm).basis, algebras.at(GroupKind::P).basis) &&
                  subset(algebras.at(GroupKind::P).basis, algebras.at(GroupKind::PLambda).basis);
        push("basis_chain", ok, "containment chain broken");
    }

    if (sig.r == 0) {
        bool ok = algebras.at(GroupKind::Ppm).basis == algebras.at(GroupKind::PpmLambda).basis &&
                  algebras.at(GroupKind::Ppm).basis == algebras.at(GroupKind::PpmRad).basis &&
                  algebras.at(GroupKind::P).basis == algebras.at(GroupKind::PLambda).basis;
        push("nondegenerate_algebra_collapse", ok, "r = 0 collapse fails");
    }
    if (sig.p == 0 && sig.q == 0) {
        auto full = all_blades(sig);
        bool ok = algebras.at(GroupKind::PpmLambda).basis == full &&
                  algebras.at(GroupKind::PpmRad).basis == full &&
                  algebras.at(GroupKind::PLambda).basis == full &&
                  algebras.at(GroupKind::Ppm).basis ==
                      subspace(sig, SubspaceKind::Parity, 0).basis() &&
                  algebras.at(GroupKind::P).basis == subspace(sig, SubspaceKind::Center).basis();
        push("grassmann_algebra_table", ok, "Grassmann algebra table mismatch");
    }

    if constexpr (!FieldTraits<F>::is_complex) {
        for (GroupKind g : p_family_kinds()) {
            std::string claim = "tangency_" + lie_name(g);
            auto rng = verify_detail::claim_rng<F>(opt, suite, claim, sig);
            auto report = check_tangency(algebras.at(g), opt.tangency_samples,
                                         opt.tangency_tolerance, rng, opt.coeff_bound);
            push(claim, report.ok(),
                 std::to_string(report.first_order_failures) + " first-order and " +
                     std::to_string(report.numeric_failures) +
                     " numeric failures, max residual " + std::to_string(report.max_residual));
        }
    }
}

// ---------------------------------------------------------------------------
// Matrix suite: the three worked examples plus embedding checks per
// signature.
// ---------------------------------------------------------------------------

inline void run_matrix_example_suite(const std::vector<MatrixRepConfig>& configs,
                                     const VerifyOptions& opt, std::vector<ClaimResult>& out) {
    const std::string suite = "matrix";
    for (const auto& cfg : configs) {
        Signature sig = cfg.source;
        out.push_back({suite, "relations_" + cfg.id, sig, matrix_relations_ok(cfg),
                       "generator matrices break the Clifford relations"});
        auto rng =
            verify_detail::claim_rng<Rational>(opt, suite, "structural_" + cfg.id, sig);
        auto report = structural_check(cfg, rng, std::min(opt.samples, 50), opt.coeff_bound);
        std::string detail;
        for (const auto& [name, ok] : report.checks)
            if (!ok) detail += (detail.empty() ? "" : ", ") + name;
        out.push_back({suite, "structural_" + cfg.id, sig, report.all_ok(), detail});
        bool hom = true;
        for (int i = 0; i < std::min(opt.samples, 50); ++i) {
            auto u = random_multivector<Rational>(rng, sig, opt.coeff_bound);
            auto v = random_multivector<Rational>(rng, sig, opt.coeff_bound);
            if (represent(cfg, u * v) != represent(cfg, u) * represent(cfg, v)) hom = false;
        }
        out.push_back({suite, "represent_homomorphism_" + cfg.id, sig, hom,
                       "represent(u*v) != represent(u)*represent(v)"});
    }
}

inline void run_embedding_suite(Signature sig, const VerifyOptions& opt,
                                std::vector<ClaimResult>& out) {
    const std::string suite = "matrix";
    Embedding emb = cjw_embedding(sig);
    out.push_back({suite, "cjw_relations", sig, embedding_relations_ok(emb),
                   "generator images break the source relations"});
    out.push_back({suite, "cjw_injective", sig, embedding_injective(emb),
                   "blade images are linearly dependent"});
    auto rng = verify_detail::claim_rng<Rational>(opt, suite, "cjw_homomorphism", sig);
    bool hom = true;
    std::string detail;
    for (int i = 0; i < opt.samples && hom; ++i) {
        auto u = random_multivector<Rational>(rng, sig, opt.coeff_bound);
        auto v = random_multivector<Rational>(rng, sig, opt.coeff_bound);
        if (embed(emb, u * v) != embed(emb, u) * embed(emb, v)) {
            hom = false;
            detail = "embed(u*v) != embed(u)*embed(v) at u=" + to_string(u) + ", v=" + to_string(v);
        }
    }
    out.push_back({suite, "cjw_homomorphism", sig, hom, detail});
}

// ---------------------------------------------------------------------------
// Atlas: per-signature coincidence classes, Lie dimensions, and the
// preservation-group identifications.
// ---------------------------------------------------------------------------

struct AtlasRow {
    Signature sig{0, 0, 1};
    // Partition of the five P-family names by exact equality of the groups,
    // in canonical order (P_pm, P, P_pm_Lambda, P_Lambda, P_pm_rad).
    std::vector<std::vector<std::string>> coincidence_classes;
    std::vector<std::pair<std::string, long>> lie_dims;
    std::vector<std::pair<std::string, std::string>> gamma_ids;
    bool sampling_consistent = true;
    std::string note;
};

// Two of the five groups coincide exactly when the intersections of their
// equivalent witness targets span the same blades; sampling cross-checks the
// exact decision in both directions.
template <class F>
AtlasRow compute_atlas_row(Signature sig, const VerifyOptions& opt) {
    AtlasRow row;
    row.sig = sig;
    const auto& kinds = p_family_kinds();

    std::vector<std::vector<BladeMask>> targets;
    for (GroupKind g : kinds) targets.push_back(p_family_minimal_target(g, sig).basis());

    std::vector<int> cls(kinds.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < kinds.size(); ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = next;
        for (std::size_t j = i + 1; j < kinds.size(); ++j)
            if (cls[j] < 0 && targets[j] == targets[i]) cls[j] = next;
        ++next;
    }
    row.coincidence_classes.resize(next);
    for (std::size_t i = 0; i < kinds.size(); ++i)
        row.coincidence_classes[cls[i]].push_back(GroupId{kinds[i]}.name());

    auto rng = verify_detail::claim_rng<F>(opt, "atlas", "row", sig);
    const int n_samples = std::min(opt.samples, 40);
    for (std::size_t i = 0; i < kinds.size(); ++i) {
        for (std::size_t j = i + 1; j < kinds.size(); ++j) {
            if (cls[i] == cls[j]) {
                for (int s = 0; s < n_samples; ++s) {
                    auto t = sample_group_element<F>({kinds[s % 2 ? i : j]}, sig, rng,
                                                     opt.coeff_bound);
                    if (!group_member<F>({kinds[s % 2 ? j : i]}, t).member)
                        row.sampling_consistent = false;
                }
            } else {
                bool separated = false;
                for (int s = 0; s < n_samples && !separated; ++s) {
                    for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
                        auto t = sample_group_element<F>({kinds[a]}, sig, rng, opt.coeff_bound);
                        if (!group_member<F>({kinds[b]}, t).member) separated = true;
                    }
                }
                if (!separated)
                    row.note += (row.note.empty() ? "" : "; ") + GroupId{kinds[i]}.name() +
                                " vs " + GroupId{kinds[j]}.name() + ": no separator sampled";
            }
        }
    }

    for (GroupKind g : kinds)
        row.lie_dims.emplace_back(lie_name(g),
                                  static_cast<long>(lie_algebra_of(g, sig).basis.size()));

    for (GroupId gamma : {GroupId{GroupKind::GammaParity, 0}, GroupId{GroupKind::GammaParity, 1},
                          GroupId{GroupKind::GammaCheckParity, 0},
                          GroupId{GroupKind::GammaCheckParity, 1}, GroupId{GroupKind::Gamma0},
                          GroupId{GroupKind::GammaN}, GroupId{GroupKind::Gamma0n},
                          GroupId{GroupKind::GammaCheck0}, GroupId{GroupKind::GammaCheckN},
                          GroupId{GroupKind::GammaCheck0n}})
        row.gamma_ids.emplace_back(gamma.name(), resolve_to_p_family(gamma, sig).name());

    return row;
}

}  // namespace dga

#endif
